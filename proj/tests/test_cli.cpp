// End-to-end checks of the CLI binary: exit codes, round-trips, catalogs.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int g_failures = 0;
std::string g_bin;

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    std::string cmd = g_bin + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

void check(const std::string& what, bool ok) {
    if (!ok) ++g_failures;
    std::cout << "CLI [" << (ok ? "PASS" : "FAIL") << "] " << what << std::endl;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: quartwist_cli_tests <path-to-quartwist>" << std::endl;
        return 2;
    }
    g_bin = argv[1];
    std::string dir = "cli_test_tmp";
    std::system(("mkdir -p " + dir).c_str());

    auto gen = run("gen fermat-diagonal '{\"a\":\"2\",\"b\":\"3\"}' --out " + dir + "/fd23.json");
    check("gen fermat-diagonal exits 0", gen.code == 0);

    auto ver = run("verify " + dir + "/fd23.json");
    check("verify round-trip exits 0", ver.code == 0);

    auto gen2 = run("gen case-iv '{\"a\":\"1\",\"b\":\"2\",\"m\":\"1\",\"a1\":\"3\",\"a2\":\"1\",\"q\":\"2\"}' --out " +
                    dir + "/iv.json");
    check("gen case-iv (9 - 1 = 8 = 2^3) exits 0", gen2.code == 0);
    check("verify case-iv exits 0", run("verify " + dir + "/iv.json").code == 0);

    auto bad = run("gen case-iv '{\"a\":\"1\",\"b\":\"2\",\"m\":\"2\",\"a1\":\"3\",\"a2\":\"1\",\"q\":\"2\"}'");
    check("gen case-iv with broken relation exits 2", bad.code == 2);

    auto badrestr = run("gen case-iv '{\"a\":\"1\",\"b\":\"1\",\"m\":\"1\",\"a1\":\"3\",\"a2\":\"1\",\"q\":\"2\"}'");
    check("gen case-iv with a=b exits 2", badrestr.code == 2);

    // corrupt a coefficient: the first "val" after "curve"
    {
        std::ifstream in(dir + "/fd23.json");
        std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto pos = s.find("\"curve\"");
        pos = s.find("\"val\"", pos);
        pos = s.find("\"2\"", pos);
        if (pos != std::string::npos) s.replace(pos, 3, "\"5\"");
        std::ofstream out(dir + "/corrupt.json");
        out << s;
    }
    auto corrupted = run("verify " + dir + "/corrupt.json");
    check("verify corrupted curve exits 1", corrupted.code == 1);

    // strip galois data: cocycle skipped, exit 1 unless --allow-no-galois
    {
        std::ifstream in(dir + "/fd23.json");
        std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto pos = s.find("\"galois\"");
        auto end = s.find("],", pos);
        s.replace(pos, end + 1 - pos, "\"galois\": []");
        std::ofstream out(dir + "/nogal.json");
        out << s;
    }
    check("verify without galois exits 1", run("verify " + dir + "/nogal.json").code == 1);
    check("verify --allow-no-galois exits 0",
          run("verify --allow-no-galois " + dir + "/nogal.json").code == 0);

    check("equiv same file exits 0",
          run("equiv " + dir + "/fd23.json " + dir + "/fd23.json").code == 0);

    run("gen case-i '{\"F1\":[\"1\",\"0\",\"2\"],\"F2\":[\"1\",\"0\",\"0\",\"0\",\"3\"],\"m\":\"2\"}' --out " +
        dir + "/i2.json");
    run("gen case-i '{\"F1\":[\"1\",\"0\",\"2\"],\"F2\":[\"1\",\"0\",\"0\",\"0\",\"3\"],\"m\":\"8\"}' --out " +
        dir + "/i8.json");
    check("equiv case-i m=2 vs m=8 exits 0 (equivalent)",
          run("equiv " + dir + "/i2.json " + dir + "/i8.json").code == 0);

    run("gen fermat-diagonal '{\"a\":\"1\",\"b\":\"1\"}' --out " + dir + "/fd11.json");
    check("equiv (2,3) vs (1,1) exits 1 (inequivalent)",
          run("equiv " + dir + "/fd23.json " + dir + "/fd11.json").code == 1);

    auto dataklein = run("data klein-pairs");
    check("data klein-pairs lists 11 rows", dataklein.code == 0 &&
              dataklein.out.find("<336,208>") != std::string::npos);
    check("data unknown table exits 2", run("data bogus").code == 2);

    auto cat = run("catalog case-ix 5 --out " + dir + "/catix.json");
    check("catalog case-ix 5 exits 0", cat.code == 0);
    {
        std::ifstream in(dir + "/catix.json");
        std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        int entries = 0;
        for (size_t pos = 0; (pos = s.find("\"provenance\"", pos)) != std::string::npos; ++pos)
            ++entries;
        check("catalog case-ix 5 has the five 9th-power-free entries", entries == 5);
        check("catalog case-ix marks k-bar isomorphism",
              s.find("all k-bar-isomorphic") != std::string::npos);
    }

    auto cat2 = run("catalog fermat-diagonal 3 --out " + dir + "/catfd.json");
    check("catalog fermat-diagonal 3 exits 0", cat2.code == 0);

    // byte stability: regenerate and compare
    run("gen fermat-diagonal '{\"a\":\"2\",\"b\":\"3\"}' --out " + dir + "/fd23b.json");
    {
        std::ifstream a(dir + "/fd23.json"), b(dir + "/fd23b.json");
        std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
        std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
        check("gen output is byte-stable", sa == sb && !sa.empty());
    }

    std::cout << (g_failures == 0 ? "CLI TESTS PASSED" : "CLI FAILURES") << std::endl;
    return g_failures == 0 ? 0 : 1;
}
