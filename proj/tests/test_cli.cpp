#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace
{

struct Run {
    int code;
    std::string out;
};

Run run(const std::string &args)
{
    const std::string cmd = std::string(ADJOINT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<json> reports(const std::string &out)
{
    std::vector<json> all;
    std::istringstream in(out);
    while ((in >> std::ws).peek() != EOF) {
        json j;
        in >> j;
        all.push_back(std::move(j));
    }
    return all;
}

class Workdir
{
public:
    Workdir()
    {
        m_path = fs::temp_directory_path() / ("adjoint_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(m_path);
    }
    ~Workdir()
    {
        std::error_code ec;
        fs::remove_all(m_path, ec);
    }
    std::string file(const std::string &name) const
    {
        return (m_path / name).string();
    }
    std::string catalog(const std::string &name) const
    {
        const std::string path = file(name + ".json");
        REQUIRE(run("catalog '" + name + "' -o '" + path + "'").code == 0);
        return path;
    }
    void write(const std::string &path, const std::string &text) const
    {
        std::ofstream(path, std::ios::binary) << text;
    }

private:
    fs::path m_path;
};

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("bound on P3 is sharp")
    {
        Workdir w;
        const auto p3 = w.catalog("P3");
        const auto r = run("bound " + p3 + " --divisor 5H --rule nefbig");
        CHECK(r.code == 0);
        const auto j = reports(r.out).at(0);
        CHECK(j["command"] == "bound");
        CHECK(j["inputs"]["rule"] == "nefbig");
        CHECK(j["result"]["display"] == "4/1 (ceil 4)");
        CHECK(j["result"]["value"] == "4/1");
    }

    TEST_CASE("identities")
    {
        const auto r = run("identities");
        CHECK(r.code == 0);
        std::istringstream in(r.out);
        std::string line;
        int lines = 0;
        while (std::getline(in, line)) {
            CHECK(line.rfind("PASS ", 0) == 0);
            ++lines;
        }
        CHECK(lines == 6);
        const auto j = reports(run("identities --json").out).at(0);
        CHECK(j["result"].size() == 6);
    }

    TEST_CASE("corrupt profile is rejected with a chiox record")
    {
        Workdir w;
        json j = json::parse(slurp(w.catalog("P3")));
        j["chi_O"] = "2/1";
        const auto bad = w.file("corrupt.json");
        w.write(bad, j.dump());
        const auto r = run("chi " + bad + " --divisor H");
        CHECK(r.code == 1);
        const auto rep = reports(r.out).at(0);
        REQUIRE(rep["violations"].size() == 1);
        CHECK(rep["violations"][0]["invariant"] == "chiox");
        CHECK(rep["error"]["kind"] == "invalid-profile");
        CHECK(rep.find("result") == rep.end());

        const auto v = run("validate " + bad);
        CHECK(v.code == 1);
        CHECK(reports(v.out).at(0)["result"]["valid"] == false);
    }

    TEST_CASE("malformed input exits with 2")
    {
        Workdir w;
        const auto p3 = w.catalog("P3");
        const auto junk = w.file("junk.json");
        w.write(junk, "{ not json");
        CHECK(run("chi " + junk + " --divisor H").code == 2);
        CHECK(run("chi " + p3 + " --divisor G").code == 2);
        CHECK(run("chi " + p3 + " --divisor 'H+'").code == 2);
        CHECK(run("bound " + p3 + " --divisor H --rule other").code == 2);
        CHECK(run("catalog P9").code == 2);
        CHECK(run("chi " + w.file("missing.json") + " --divisor H").code == 2);
        CHECK(run("").code == 2);
        CHECK(run("blowup " + p3 + " --curve 'g=x,deg=H:1'").code == 2);
        CHECK(run("blowup " + p3 + " --point --symbol H").code == 2);
        const auto r = run("chi " + p3 + " --divisor G");
        CHECK(reports(r.out).at(0)["error"]["kind"] == "unknown-symbol");
    }

    TEST_CASE("contradictions and missing flags exit with 1")
    {
        Workdir w;
        const auto p3 = w.catalog("P3");
        CHECK(run("certify " + p3 + " --divisor H --target bs").code == 1);
        CHECK(run("chi " + p3 + " --divisor 'K+1/2*H' --h0").code == 1);
        CHECK(run("chi " + p3 + " --divisor 5H --h0").code == 0);
    }

    TEST_CASE("certify")
    {
        Workdir w;
        const auto q5 = w.catalog("Q5");
        const auto r = run("certify " + q5 + " --divisor H --target adjoint");
        CHECK(r.code == 0);
        const auto j = reports(r.out).at(0);
        CHECK(j["certificate"]["route"] == "fukuma-ka");
        CHECK(j["certificate"]["integer_bound"] == "1");
        CHECK(j["result"]["conclusion"] == "NonVanishing");
    }

    TEST_CASE("blowup writes a valid profile")
    {
        Workdir w;
        const auto p3 = w.catalog("P3");
        const auto pt = w.file("pt.json");
        CHECK(run("blowup " + p3 + " --point --symbol E -o " + pt).code == 0);
        CHECK(run("validate " + pt).code == 0);
        const auto j = json::parse(slurp(pt));
        CHECK(j["canonical"] == "2*E-4*H");

        const auto line = w.file("line.json");
        CHECK(run("blowup " + p3 + " --curve 'g=0,deg=H:1' --symbol E -o " + line).code == 0);
        CHECK(run("validate " + line).code == 0);
        const auto r = run("bound " + line + " --divisor 2H-E --rule bs");
        CHECK(r.code == 0);

        // Without -o the profile goes to standard output.
        const auto s = run("blowup " + p3 + " --point");
        CHECK(s.code == 0);
        CHECK(json::parse(s.out)["basis"] == json::array({"H", "E"}));
    }

    TEST_CASE("witness")
    {
        Workdir w;
        const auto r = run("witness-bad-anticanonical " + w.catalog("Pencil5"));
        CHECK(r.code == 0);
        const auto j = reports(r.out).at(0);
        CHECK(j["result"]["eps"] == "1/2");
        CHECK(j["result"]["generically_nef"] == false);
    }

    TEST_CASE("catalog output is the serialized profile")
    {
        Workdir w;
        const auto path = w.catalog("BlLineP3");
        CHECK(run("catalog BlLineP3").out == slurp(path));
        const auto list = run("catalog --list");
        CHECK(list.code == 0);
        CHECK(list.out.find("Pencil5\n") != std::string::npos);
    }

    TEST_CASE("batch mode keeps input order and is deterministic")
    {
        Workdir w;
        std::string files;
        std::vector<std::string> names{"P3", "Q5", "BlP3", "BlLineP3", "Pencil5", "hypersurface(6)"};
        for (const auto &n : names) {
            files += " '" + w.catalog(n) + "'";
        }
        const auto serial = run("chi" + files + " --divisor 2H");
        const auto parallel = run("chi" + files + " --divisor 2H --jobs 4");
        CHECK(serial.code == 0);
        CHECK(serial.out == parallel.out);
        CHECK(run("chi" + files + " --divisor 2H --jobs 6").out == serial.out);
        const auto all = reports(serial.out);
        REQUIRE(all.size() == names.size());
        for (std::size_t i = 0; i < names.size(); ++i) {
            CHECK(all[i]["inputs"]["file"] == w.file(names[i] + ".json"));
        }
        CHECK(all[0]["result"]["chi"] == "10/1");
        CHECK(all[1]["result"]["chi"] == "15/1");

        // One bad file fails the batch but the others still report.
        json j = json::parse(slurp(w.file("P3.json")));
        j["chi_O"] = "3/1";
        w.write(w.file("bad.json"), j.dump());
        const auto mixed = run("chi" + files + " " + w.file("bad.json") + " --divisor H --jobs 3");
        CHECK(mixed.code == 1);
        const auto m = reports(mixed.out);
        REQUIRE(m.size() == names.size() + 1);
        CHECK(m.back()["violations"][0]["invariant"] == "chiox");
        CHECK(m.front()["result"]["chi"] == "4/1");
    }
}
