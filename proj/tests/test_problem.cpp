#include <doctest.h>

#include "support.hpp"

using namespace icode;

TEST_CASE("normalize splits multi-demand receivers") {
    RawProblem raw;
    raw.num_messages = 3;
    raw.receivers.push_back({{1, 2}, {0}});
    raw.receivers.push_back({{0}, {1}});
    ProblemInstance p = normalize(raw);
    REQUIRE(p.receivers.size() == 3);
    CHECK(p.receivers[0] == Receiver{1, {0}});
    CHECK(p.receivers[1] == Receiver{2, {0}});
    CHECK(p.receivers[2] == Receiver{0, {1}});

    RawProblem bad = raw;
    bad.receivers[0].knows = {1};
    CHECK_THROWS_AS(normalize(bad), std::invalid_argument);
}

TEST_CASE("normalize is the identity on normalized instances") {
    RawProblem raw;
    raw.num_messages = 2;
    raw.receivers.push_back({{0}, {1}});
    raw.receivers.push_back({{1}, {}});
    ProblemInstance p = normalize(raw);
    RawProblem again;
    again.num_messages = p.num_messages;
    for (const Receiver& r : p.receivers) again.receivers.push_back({{r.wants}, r.knows});
    CHECK(normalize(again) == p);
}

TEST_CASE("normalize grows the receiver count by the extra demands") {
    std::mt19937_64 rng(8001);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 2 + static_cast<int>(rng() % 4);
        RawProblem raw;
        raw.num_messages = m;
        int expected = 0;
        // one receiver per message keeps the instance valid, then extras
        for (int j = 0; j < m; ++j) {
            raw.receivers.push_back({{j}, {}});
            ++expected;
        }
        int extras = static_cast<int>(rng() % 3);
        for (int e = 0; e < extras; ++e) {
            int wants_count = 1 + static_cast<int>(rng() % m);
            std::vector<int> all(m);
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            MultiReceiver r;
            r.wants.assign(all.begin(), all.begin() + wants_count);
            expected += wants_count;
            raw.receivers.push_back(std::move(r));
        }
        CHECK(static_cast<int>(normalize(raw).receivers.size()) == expected);
    }
}

TEST_CASE("fitting matrix of the Example 1 base problem") {
    RawProblem raw;
    raw.num_messages = 3;
    raw.receivers.push_back({{0}, {1}});
    raw.receivers.push_back({{1}, {2}});
    raw.receivers.push_back({{2}, {0}});
    CHECK(fitting_matrix(normalize(raw)) == testutil::tri("ex1_base.tri"));
}

TEST_CASE("fitting matrix for degenerate side information") {
    RawProblem raw;
    raw.num_messages = 3;
    for (int j = 0; j < 3; ++j) raw.receivers.push_back({{j}, {}});
    TriMatrix none = fitting_matrix(normalize(raw));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(none.get(i, j) == (i == j ? Tri::One : Tri::Zero));

    RawProblem full;
    full.num_messages = 3;
    for (int j = 0; j < 3; ++j) {
        std::vector<int> others;
        for (int k = 0; k < 3; ++k)
            if (k != j) others.push_back(k);
        full.receivers.push_back({{j}, others});
    }
    TriMatrix all = fitting_matrix(normalize(full));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(all.get(i, j) == (i == j ? Tri::One : Tri::Unknown));
}

TEST_CASE("problem_of inverts fitting_matrix") {
    TriMatrix c2 = testutil::tri("ex1_c2.tri");
    ProblemInstance p = problem_of(c2);
    REQUIRE(p.receivers.size() == 2);
    CHECK(p.receivers[0] == Receiver{0, {1}});
    CHECK(p.receivers[1] == Receiver{1, {0}});

    TriMatrix no_demand(2, 2);
    no_demand.set(0, 0, Tri::One);
    no_demand.set(1, 0, Tri::One);
    CHECK_THROWS_AS(problem_of(no_demand), std::invalid_argument);

    std::mt19937_64 rng(8002);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng() % 4);
        int n = m + static_cast<int>(rng() % 3);
        TriMatrix fm = testutil::random_fitting(rng, n, m, 0.4);
        CHECK(fitting_matrix(problem_of(fm)) == fm);
    }
}

TEST_CASE("completes checks known entries only") {
    BinMatrix fb = testutil::bin("ex5_fb.bin");
    CHECK(completes(fb, testutil::tri("ex1_base.tri")));

    TriMatrix with_one(2, 2);
    with_one.set(0, 0, Tri::One);
    with_one.set(1, 1, Tri::One);
    BinMatrix zero(2, 2);
    CHECK_FALSE(completes(zero, with_one));

    TriMatrix unknowns(2, 2, Tri::Unknown);
    std::mt19937_64 rng(8003);
    for (int trial = 0; trial < 20; ++trial) CHECK(completes(testutil::random_bin(rng, 2, 2), unknowns));
}

TEST_CASE("completes is monotone in unknowns") {
    std::mt19937_64 rng(8004);
    for (int trial = 0; trial < 200; ++trial) {
        TriMatrix fm = testutil::random_tri(rng, 3, 3);
        BinMatrix f = testutil::random_bin(rng, 3, 3);
        if (!completes(f, fm)) continue;
        TriMatrix weaker = fm;
        weaker.set(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), Tri::Unknown);
        CHECK(completes(f, weaker));
    }
}

TEST_CASE("tri parser round-trips and reports errors") {
    CHECK(parse_tri("1x0\n01x\nx01\n") == testutil::tri("ex1_base.tri"));
    TriMatrix one(1, 1);
    one.set(0, 0, Tri::One);
    CHECK(parse_tri("1\n") == one);
    CHECK(parse_tri("1 x 0\n0 1 x\nx 0 1\n") == testutil::tri("ex1_base.tri"));

    CHECK_THROWS_AS(parse_tri(""), ParseError);
    CHECK_THROWS_AS(parse_tri("10\n1\n"), ParseError);
    try {
        parse_tri("10\n1q\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 2);
    }

    std::mt19937_64 rng(8005);
    for (int trial = 0; trial < 100; ++trial) {
        TriMatrix fm = testutil::random_tri(rng, 1 + rng() % 5, 1 + rng() % 5);
        CHECK(parse_tri(emit_tri(fm)) == fm);
        CHECK(emit_tri(parse_tri(emit_tri(fm))) == emit_tri(fm));
    }
}

TEST_CASE("bin parser round-trips") {
    CHECK_THROWS_AS(parse_bin("1x\n"), ParseError);
    std::mt19937_64 rng(8006);
    for (int trial = 0; trial < 100; ++trial) {
        BinMatrix m = testutil::random_bin(rng, 1 + rng() % 5, 1 + rng() % 5);
        CHECK(parse_bin(emit_bin(m)) == m);
    }
}

TEST_CASE("problem files parse and emit") {
    std::string text = "m=3\nwants=1 knows=2\nwants=2 knows=3\nwants=3 knows=1\n";
    ProblemInstance p = normalize(parse_problem(text));
    CHECK(fitting_matrix(p) == testutil::tri("ex1_base.tri"));
    CHECK(emit_problem(p) == text);

    ProblemInstance q = normalize(parse_problem("m=2\nwants=1,2 knows=\n"));
    CHECK(q.receivers.size() == 2);

    CHECK_THROWS_AS(parse_problem("wants=1 knows=\n"), ParseError);
    CHECK_THROWS_AS(parse_problem("m=2\nnonsense\n"), ParseError);
}
