#include "doctest.h"

#include <sstream>

#include "catlat/cli.hpp"

using namespace catlat;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string seven_json =
    R"({"n":7,"pairs":[[1,3],[1,4],[1,5],[1,6],[1,7],[2,3],[2,4],[2,5],[2,6],[2,7],[4,5],[4,6],[4,7],[6,7]],"canonical":true})";

}  // namespace

TEST_CASE("enumerate text") {
    const CliRun r = run({"enumerate", "--n", "3", "--kind", "perm"});
    CHECK(r.code == 0);
    CHECK(r.out == "123\n132\n213\n231\n321\n");

    const CliRun t = run({"enumerate", "--n", "1", "--kind", "tree"});
    CHECK(t.code == 0);
    CHECK(t.out == "()\n");

    const CliRun p = run({"enumerate", "--n", "2", "--kind", "path"});
    CHECK(p.code == 0);
    CHECK(p.out == "UDUD\nUUDD\n");
}

TEST_CASE("enumerate json") {
    const CliRun r = run({"enumerate", "--n", "4", "--kind", "spio", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\": 14") != std::string::npos);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j.at("elements").size() == 14);
    CHECK(j.at("kind") == "spio");
}

TEST_CASE("enumerate rejects out-of-range sizes") {
    const CliRun r = run({"enumerate", "--n", "99", "--kind", "perm"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
}

TEST_CASE("convert") {
    const CliRun r = run({"convert", "--from", "perm", "--to", "spio", "2146753"});
    CHECK(r.code == 0);
    CHECK(r.out == seven_json + "\n");

    // star tree -> chain -> identity permutation
    CHECK(run({"convert", "--from", "tree", "--to", "perm", "()()()"}).out == "123\n");
    // path tree -> antichain -> descending permutation
    CHECK(run({"convert", "--from", "tree", "--to", "perm", "((()))"}).out == "321\n");
    CHECK(run({"convert", "--from", "path", "--to", "tree", "UUDD"}).out == "(())\n");

    // stdin, one object per line
    const CliRun s = run({"convert", "--from", "perm", "--to", "tree"}, "123\n321\n");
    CHECK(s.code == 0);
    CHECK(s.out == "()()()\n((()))\n");

    CHECK(run({"convert", "--from", "perm", "--to", "spio", "312"}).code == 2);
    CHECK(run({"convert", "--from", "tree", "--to", "perm", "((("}).code == 2);
    CHECK(run({"convert", "--from", "perm", "--to", "tree"}, "").code == 2);
}

TEST_CASE("convert round trips across every kind pair") {
    const std::vector<std::string> kinds{"spio", "tree", "perm", "path"};
    for (int n = 0; n <= 6; ++n)
        for (const Spio& s : enumerate_spios(n))
            for (const std::string& from : kinds)
                for (const std::string& to : kinds) {
                    const std::string start = render_object(*parse_kind(from), s);
                    const CliRun fwd = run({"convert", "--from", from, "--to", to, start});
                    REQUIRE(fwd.code == 0);
                    std::string mid = fwd.out;
                    mid.pop_back();  // trailing newline
                    const CliRun back = run({"convert", "--from", to, "--to", from, mid});
                    REQUIRE(back.code == 0);
                    CHECK(back.out == start + "\n");
                }
}

TEST_CASE("convert relabels non-canonical posets and says so") {
    const std::string scrambled = R"({"n":3,"pairs":[[1,2]]})";
    const CliRun r = run({"convert", "--from", "spio", "--to", "spio", scrambled});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"n":3,"pairs":[[2,3]],"canonical":true})" "\n");
    CHECK(r.err.find("relabelled") != std::string::npos);
}

TEST_CASE("cmp") {
    CHECK(run({"cmp", "--order", "strong", "468753921", "768543921"}).out == "LT\n");
    CHECK(run({"cmp", "--order", "strong", "768543921", "468753921"}).out == "GT\n");
    CHECK(run({"cmp", "--order", "dyck", "(()())", "(()())"}).out == "EQ\n");
    CHECK(run({"cmp", "--order", "tamari", "(())()", "()(())"}).out == "INCOMPARABLE\n");
    // the pair the Dyck order adds on top of Tamari at n=3
    CHECK(run({"cmp", "--order", "dyck", "()(())", "(()())"}).out == "LT\n");
    CHECK(run({"cmp", "--order", "tamari", "()(())", "(()())"}).out == "INCOMPARABLE\n");
    CHECK(run({"cmp", "--order", "weak", "213", "231"}).out == "LT\n");
    CHECK(run({"cmp", "--order", "weak", "213", "132"}).out == "INCOMPARABLE\n");

    // poset JSON arguments work through the same inference
    const std::string chain3 = R"({"n":3,"pairs":[[1,2],[1,3],[2,3]],"canonical":true})";
    const std::string anti3 = R"({"n":3,"pairs":[],"canonical":true})";
    CHECK(run({"cmp", "--order", "dyck", chain3, anti3}).out == "LT\n");
    CHECK(run({"cmp", "--order", "tamari", anti3, chain3}).out == "GT\n");

    // mixed kinds or sizes are domain errors
    CHECK(run({"cmp", "--order", "dyck", "()()", "123"}).code == 2);
    CHECK(run({"cmp", "--order", "dyck", "123", "1234"}).code == 2);
    CHECK(run({"cmp", "--order", "dyck", "123"}).code == 2);

    // stdin input
    CHECK(run({"cmp", "--order", "dyck"}, "123\n321\n").out == "LT\n");
}

TEST_CASE("cmp agrees across kinds") {
    for (const std::string& order : {std::string("dyck"), std::string("tamari"),
                                     std::string("weak"), std::string("strong")})
        for (const Spio& a : enumerate_spios(3))
            for (const Spio& b : enumerate_spios(3)) {
                const CliRun via_tree = run({"cmp", "--order", order,
                                             render_object(ObjectKind::tree, a),
                                             render_object(ObjectKind::tree, b)});
                const CliRun via_perm = run({"cmp", "--order", order,
                                             render_object(ObjectKind::perm, a),
                                             render_object(ObjectKind::perm, b)});
                CHECK(via_tree.out == via_perm.out);
            }
}

TEST_CASE("lattice") {
    CHECK(run({"lattice", "--order", "dyck", "--op", "meet", "(())()", "()(())"}).out ==
          "()()()\n");
    CHECK(run({"lattice", "--order", "dyck", "--op", "join", "(())()", "()(())"}).out ==
          "(()())\n");
    CHECK(run({"lattice", "--order", "tamari", "--op", "join", "(())()", "()(())"}).out ==
          "((()))\n");
    CHECK(run({"lattice", "--order", "tamari", "--op", "meet", "123", "321"}).out == "123\n");
    CHECK(run({"lattice", "--order", "weak", "--op", "meet", "123", "321"}).code == 1);
}

TEST_CASE("hasse") {
    const CliRun r = run({"hasse", "--order", "dyck", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph \"dyck_n3\"") == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 13);  // 5 nodes + 5 edges + 3 frame lines

    const CliRun one = run({"hasse", "--order", "tamari", "--n", "1"});
    CHECK(one.out.find("n0") != std::string::npos);
    CHECK(one.out.find("->") == std::string::npos);

    const CliRun j = run({"hasse", "--order", "tamari", "--n", "3", "--format", "json"});
    const ordered_json parsed = ordered_json::parse(j.out);
    CHECK(parsed.at("order") == "tamari");
    CHECK(parsed.at("elements").size() == 5);
    CHECK(parsed.at("covers").size() == 5);

    CHECK(run({"hasse", "--order", "dyck", "--n", "9"}).code == 2);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::vector<std::string>> invocations{
        {"enumerate", "--n", "4", "--kind", "tree"},
        {"hasse", "--order", "strong", "--n", "3", "--format", "json"},
        {"hasse", "--order", "weak", "--n", "4"},
        {"convert", "--from", "perm", "--to", "spio", "2146753"},
    };
    for (const auto& args : invocations) CHECK(run(args).out == run(args).out);
}

TEST_CASE("verify") {
    const CliRun r = run({"verify", "--max-n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("catalan-count n=1: 1") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("claims passed") != std::string::npos);
    CHECK(run({"verify", "--max-n", "9"}).code == 1);
}

TEST_CASE("usage errors") {
    CHECK(run({"enumerate", "--n", "3", "--kind", "zebra"}).code == 1);
    CHECK(run({"enumerate", "--n", "3", "--frobnicate"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("poset JSON io") {
    const Spio s = enumerate_spios(3)[2];
    CHECK(spio_from_json(spio_to_json(s)) == s);

    CHECK_THROWS_AS(spio_from_json(ordered_json::parse(R"({"n":3})")), std::invalid_argument);
    // covers alone are rejected: the stored relation must be closed
    CHECK_THROWS_AS(spio_from_json(ordered_json::parse(R"({"n":3,"pairs":[[1,2],[2,3]]})")),
                    std::invalid_argument);
    // lying about canonical labelling is rejected
    CHECK_THROWS_AS(
        spio_from_json(ordered_json::parse(R"({"n":3,"pairs":[[1,2]],"canonical":true})")),
        std::invalid_argument);
    // claiming false on a canonical poset is accepted as a weaker statement
    CHECK(spio_from_json(ordered_json::parse(R"({"n":3,"pairs":[[2,3]],"canonical":false})"))
              .is_canonical());

    const BruhatTable strong(3, BruhatTable::Kind::strong);
    const ordered_json j = bruhat_covers_json(strong);
    CHECK(j.at("order") == "strong");
    CHECK(j.at("elements").size() == 6);
    CHECK(j.at("covers").size() == 8);
}
