#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = lgint::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

bool is_rational_string(const json& v) {
    if (!v.is_string()) return false;
    const std::string s = v.get<std::string>();
    return !s.empty() && s.find_first_not_of("-0123456789/") == std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("plain output") {
    CHECK(trimmed(run({"degree", "-n", "3"}).out) == "16");
    CHECK(trimmed(run({"integral", "-n", "3", "--class", "s1^2*s2^2"}).out) == "4");
    CHECK(trimmed(run({"integral", "-n", "3", "--class", "s1^2*s2^2", "--route", "dp"}).out) == "4");
    CHECK(trimmed(run({"qprod", "-n", "4", "--a", "3,2", "--b", "2,1"}).out).find("2*s[4,3,1]") == 0);
    CHECK(trimmed(run({"qtilde", "-n", "5", "--a", "4,2,1"}).out) == "-2*s5*s1^2+s4*s2*s1+2*s5*s2-2*s4*s3");
    CHECK(trimmed(run({"structure", "-n", "3", "--a", "2,1", "--b", "2", "--c", "3,2"}).out) == "2");
    CHECK(trimmed(run({"gw1", "-n", "3", "--a", "2,1", "--b", "2", "--c", "3,2"}).out) == "1");
    CHECK(run({"verify", "identity", "-n", "2", "--seed", "3", "--trials", "10"}).code == lgint::cli::kExitOk);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == lgint::cli::kExitUsage);
    CHECK(run({"degree"}).code == lgint::cli::kExitUsage);
    CHECK(run({"degree", "-n", "0"}).code == lgint::cli::kExitUsage);
    CHECK(run({"degree", "-n", "7"}).code == lgint::cli::kExitUsage);
    CHECK(run({"integral", "-n", "3", "--class", "s1+"}).code == lgint::cli::kExitUsage);
    CHECK(run({"integral", "-n", "3", "--class", "s4"}).code == lgint::cli::kExitUsage);
    CHECK(run({"integral", "-n", "3", "--class", "s1", "--route", "bogus"}).code == lgint::cli::kExitUsage);
    CHECK(run({"qtilde", "-n", "3", "--a", "2,2"}).code == lgint::cli::kExitUsage);
    CHECK(run({"gw1", "-n", "3", "--a", "1", "--b", "1", "--c", "1"}).code == lgint::cli::kExitUsage);
    CHECK(run({"qprod", "-n", "3", "--a", "3,2", "--b", "3,1"}).code == lgint::cli::kExitUsage);
    auto bad = run({"integral", "-n", "3", "--class", "s1*)"});
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("lower-degree residue warns") {
    auto r = run({"integral", "-n", "3", "--class", "s1^2*s2^2+s1"});
    CHECK(r.code == 0);
    CHECK(trimmed(r.out) == "4");
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("json records") {
    auto cert = json::parse(run({"integral", "-n", "3", "--class", "s1^2*s2^2", "--json"}).out);
    CHECK(cert["n"] == 3);
    CHECK(cert["route"].is_string());
    CHECK(is_rational_string(cert["c_n"]));
    CHECK(cert["integral"] == "4");

    auto qp = json::parse(run({"qprod", "-n", "3", "--a", "2,1", "--b", "2", "--json"}).out);
    CHECK(qp == json::parse(R"({"n":3,"a":"2,1","b":"2","classical":[{"gamma":"3,2","coef":2}],"q1":[{"gamma":"1","coef":1}]})"));

    auto deg = json::parse(run({"degree", "-n", "4", "--json", "--cross-check"}).out);
    CHECK(deg["n"] == 4);
    CHECK(deg["degree"] == "768");

    auto st = json::parse(run({"structure", "-n", "3", "--a", "2,1", "--b", "2", "--c", "3,2", "--json"}).out);
    for (const char* key : {"n", "a", "b", "c", "coef"}) CHECK(st.contains(key));

    auto g = json::parse(run({"gw1", "-n", "3", "--a", "2,1", "--b", "2", "--c", "3,2", "--json"}).out);
    CHECK(g["coef"] == 1);

    auto q = json::parse(run({"qtilde", "-n", "3", "--a", "2,1", "--json"}).out);
    CHECK(q.is_object());

    auto v = json::parse(run({"verify", "lemma1", "--seed", "5", "--trials", "20", "--json"}).out);
    for (const char* key : {"check", "n", "seed", "trials", "passed", "ok"}) CHECK(v.contains(key));
    CHECK(v["ok"] == true);
}

TEST_CASE("verify is deterministic") {
    auto a = run({"verify", "identity", "-n", "3", "--seed", "9", "--trials", "8", "--json"});
    auto b = run({"verify", "identity", "-n", "3", "--seed", "9", "--trials", "8", "--json"});
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}

}
