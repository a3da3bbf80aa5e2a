#include <doctest.h>

#include <set>

#include "modrep/json_io.hpp"
#include "modrep/verify.hpp"

using namespace modrep;

namespace {
Partition P(const char* s) { return Partition::parse(s); }

bool is_identity(const IntMatrix& m) {
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            if (m[r][c] != (r == c ? 1 : 0)) return false;
    return true;
}
}  // namespace

TEST_CASE("Multiplicity matrix") {
    const Prime p(3);
    CHECK(is_identity(m_matrix(5, p)));
    CHECK(m_matrix(1, p) == IntMatrix{{1}});
    CHECK(is_identity(m_matrix(6, p)));
    auto m7 = m_matrix(7, p);
    auto n7 = nmat_at_one(llt_canonical(7, p));
    CHECK(m7 == n7);
    CHECK_FALSE(is_identity(m7));
    CHECK_THROWS_AS(m_matrix(9, p), LadderLengthError);
}

TEST_CASE("Conjecture check, worked example") {
    auto rep = conjecture_check(5, Prime(3));
    CHECK(rep.overall);
    CHECK_FALSE(rep.outside_region);
    CHECK(rep.nonnegative());
    CHECK(rep.all_constant);
    CHECK(rep.checks.size() == 25);
    for (const auto& c : rep.checks) CHECK(c.pass);
    CHECK(is_identity(rep.amat));

    std::set<std::pair<std::string, std::string>> off;
    for (std::size_t r = 0; r < rep.decomposition_rows.size(); ++r)
        for (std::size_t c = 0; c < rep.order.size(); ++c) {
            const auto& d = rep.decomposition[r][c];
            CHECK((d == 0 || d == 1));
            if (d == 1 && rep.decomposition_rows[r] != rep.order[c])
                off.emplace(rep.order[c].to_string(), rep.decomposition_rows[r].to_string());
        }
    std::set<std::pair<std::string, std::string>> expected{
        {"3,2", "4,1"}, {"2,2,1", "5"}, {"2,1,1,1", "2,2,1"}, {"1,1,1,1,1", "3,2"}};
    CHECK(off == expected);
}

TEST_CASE("Conjecture check, small and desk-scale sizes") {
    auto one = conjecture_check(1, Prime(3));
    CHECK(one.overall);
    CHECK(one.decomposition == IntMatrix{{1}});
    auto eight = conjecture_check(8, Prime(3));
    CHECK(eight.overall);
    CHECK(eight.ladder_violations.empty());
    auto five = conjecture_check(9, Prime(5));
    CHECK(five.overall);
}

TEST_CASE("Reports beyond n < p^2 are marked") {
    auto rep = conjecture_check(9, Prime(3));
    CHECK(rep.outside_region);
    CHECK(rep.ladder_violations == std::vector<Partition>{P("5,3,1")});
    CHECK(rep.overall);
}

TEST_CASE("Full-Gram oracle") {
    auto g = integral_gram(P("2,1"));
    CHECK(g == RationalMatrix{{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}});
    CHECK(g[0][0] * g[1][1] - g[0][1] * g[1][0] == 3);
    const Prime p(3);
    CHECK(gram_oracle_dimD(P("2,1"), p) == 1);
    CHECK(gram_oracle_dimD(P("2"), p) == 1);
    CHECK(gram_oracle_dimD(P("1,1,1"), p) == 1);
    CHECK(integral_gram(P("1,1,1")) == RationalMatrix{{Rational(1)}});
    CHECK(gram_oracle_dimD(P("3,2"), Prime(5)) == 5);
    CHECK_THROWS_AS(integral_gram(P("3,2"), OracleOptions{3, false}), std::length_error);
    CHECK_NOTHROW(integral_gram(P("3,2"), OracleOptions{3, true}));
}

TEST_CASE("Decomposition matrix consistency") {
    for (int n : {2, 5, 7}) {
        auto res = consistency_check(n, Prime(3));
        CHECK_MESSAGE(res.ok, n);
        CHECK(res.diffs.empty());
    }
    auto rep = conjecture_check(5, Prime(3));
    rep.decomposition[0][0] += 1;
    auto bad = consistency_check(rep);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.diffs.empty());

    auto failed = conjecture_check(4, Prime(3));
    failed.overall = false;
    CHECK_FALSE(consistency_check(failed).ok);
}

TEST_CASE("Parallel and serial runs agree") {
    VerifyOptions serial, parallel;
    parallel.jobs = 3;
    auto a = conjecture_check(7, Prime(3), serial);
    auto b = conjecture_check(7, Prime(3), parallel);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(m_matrix(8, Prime(3), serial) == m_matrix(8, Prime(3), parallel));
    CHECK(to_json(llt_canonical(8, Prime(3), TieBreak::lex_descending, 1)).dump() ==
          to_json(llt_canonical(8, Prime(3), TieBreak::lex_descending, 4)).dump());
}
