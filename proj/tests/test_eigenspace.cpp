#include <doctest.h>

#include "modrep/eigenspace.hpp"
#include "support/properties.hpp"

using namespace modrep;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
StandardTableau T(std::vector<std::vector<int>> rows) { return StandardTableau::from_rows(rows); }
}  // namespace

TEST_CASE("phi-chain bases of the worked example") {
    const Prime p(3);
    auto a = phi_chain_basis(P("2,1^3"), P("2,2,1"), p);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == SeminormalVector::basis(T({{1, 2}, {3, 5}, {4}})));
    auto b = phi_chain_basis(P("1^5"), P("3,2"), p);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == SeminormalVector::basis(T({{1, 3, 5}, {2, 4}})));
    CHECK(phi_chain_basis(P("3,2"), P("3,2"), p).size() == 2);
    CHECK(phi_chain_basis(P("1^5"), P("5"), p).empty());
    CHECK_THROWS_AS(phi_chain_basis(P("3,2"), P("3,1"), p), SizeMismatch);
    CHECK_THROWS_AS(phi_chain_basis(P("5,3,1"), P("5,3,1"), p), LadderLengthError);
}

TEST_CASE("Ladder symmetrization") {
    const Prime p(3);
    auto a = phi_chain_basis(P("2,1^3"), P("2,2,1"), p);
    CHECK(ladder_symmetrize(P("2,1^3"), a, p) == a);
    auto b = phi_chain_basis(P("3,2"), P("3,2"), p);
    CHECK(ladder_symmetrize(P("3,2"), b, p).size() == 1);
    CHECK(ladder_symmetrize(P("3,2"), {}, p).empty());
    auto avg = ladder_average(ladder_decomposition(P("3,2"), p), b);
    REQUIRE(avg.size() == 2);
    CHECK_FALSE(avg[0].is_zero());
    CHECK(independent_subset(avg).size() == 1);
}

TEST_CASE("Gram matrices and ranks") {
    auto t = SeminormalVector::basis(T({{1, 2}, {3, 5}, {4}}));
    CHECK(gram_matrix({t}) == RationalMatrix{{Rational(3)}});
    CHECK(gram_matrix({}).empty());
    auto u = SeminormalVector::basis(StandardTableau::row_reading(P("2,1")));
    auto w = SeminormalVector::basis(T({{1, 3}, {2}}));
    auto g = gram_matrix({u, w});
    CHECK(g[0][1] == 0);
    CHECK(g[0][0] == gamma(StandardTableau::row_reading(P("2,1"))));

    const Prime p(3);
    CHECK(modp_rank({{Rational(3)}}, p).rank == 0);
    CHECK(modp_rank({{Rational(2)}}, p).rank == 1);
    CHECK(modp_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, p).rank == 1);
    auto red = modp_rank({{Rational(-1, 2)}}, p);
    CHECK(red.reduced == ModpMatrix{{1}});
    CHECK_THROWS_AS(modp_rank({{Rational(1, 3)}}, p), std::domain_error);
    CHECK(rank_mod_p({{1, 2}, {2, 1}}, p) == 1);
    CHECK(rank_mod_p({{1, 2}, {2, 1}}, Prime(5)) == 2);
}

TEST_CASE("dim of ladder eigenspaces of simple modules") {
    const Prime p(3);
    CHECK(dim_e_tilde_D(P("2,1^3"), P("2,2,1"), p) == 0);
    CHECK(dim_e_tilde_D(P("1^5"), P("3,2"), p) == 0);
    CHECK(dim_e_tilde_D(P("3,2"), P("3,2"), p) == 1);
    auto rep = gram_report(P("2,1^3"), P("2,2,1"), p);
    CHECK(rep.basis_size_before_symmetrization == 1);
    CHECK(rep.basis_size == 1);
    CHECK(rep.gram == RationalMatrix{{Rational(3)}});
    CHECK(rep.gram_mod_p == ModpMatrix{{0}});
    auto empty = gram_report(P("1^5"), P("5"), p);
    CHECK(empty.basis_size == 0);
    CHECK(empty.rank == 0);
}

TEST_CASE("Integral basis and class-eigenspace ranks") {
    const Prime p(3);
    auto basis = integral_basis(P("3,2"));
    CHECK(basis.size() == 5);
    for (const auto& s : standard_tableaux(P("3,2"))) {
        auto word = d_reduced_word(s).word;
        SeminormalVector v = SeminormalVector::basis(StandardTableau::row_reading(P("3,2")));
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = sigma_action(*it, v);
        CHECK(std::find(basis.begin(), basis.end(), v) != basis.end());
    }
    auto lad = ladder_decomposition(P("3,2"), p);
    CHECK(divided_power_dim(lad, basis, p) == 1);
    auto r = props::class_rank_agreement(p, 7);
    CHECK_MESSAGE(r.ok, r.failure);
    auto r5 = props::class_rank_agreement(Prime(5), 7);
    CHECK_MESSAGE(r5.ok, r5.failure);
}

TEST_CASE("Eigenspace properties") {
    const Prime p(3);
    auto dim = props::symmetrized_dimension(p, 8);
    CHECK_MESSAGE(dim.ok, dim.failure);
    auto pre = props::unsymmetrized_basis(p, 7);
    CHECK_MESSAGE(pre.ok, pre.failure);
    for (int q : {3, 5}) {
        auto integ = props::symmetrized_gram_integrality(Prime(q), 8);
        CHECK_MESSAGE(integ.ok, integ.failure);
    }
    auto word = props::reduced_word_invariance(p, 7);
    CHECK_MESSAGE(word.ok, word.failure);
    auto diag = props::diagonal_multiplicity(p, 8);
    CHECK_MESSAGE(diag.ok, diag.failure);
    auto sub = props::subset_rank_matches_full(p, 8);
    CHECK_MESSAGE(sub.ok, sub.failure);
}
