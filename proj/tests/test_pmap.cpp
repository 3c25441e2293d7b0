#include <cmath>
#include <random>

#include "doctest.h"
#include "pncp/pmap.hpp"
#include "test_support.hpp"

using namespace pncp;
using pncp::testing::random_complex;

namespace {

Matrix a1() {
    Matrix a(2, 2);
    a << 0.25, 1.0 / 3.0, 1.0 / 9.0, 2.0;
    return a;
}

Matrix real4(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(4, 4);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("max_entangled_projector") {
    const Matrix p2 = max_entangled_projector(2);
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
    CHECK((p2 - expected).norm() == 0.0);
    CHECK(p2.trace().real() == doctest::Approx(1.0));

    const Matrix p3 = max_entangled_projector(3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(p3(i * 3 + i, j * 3 + j) == Complex(1.0 / 3.0));
        }
    }
    CHECK(p3.cwiseAbs().sum() == doctest::Approx(3.0));
    const RealVector eigs = herm_eigs(p3).values;
    CHECK(eigs(8) == doctest::Approx(1.0));  // rank one
    CHECK(eigs(7) == doctest::Approx(0.0).epsilon(1e-14));

    CHECK_THROWS_AS(max_entangled_projector(1), BadDimension);
}

TEST_CASE("apply_map: examples") {
    CHECK((apply_map({2, 0.5, 0.0}, Matrix::Identity(2, 2)) -
           Matrix::Identity(4, 4))
              .norm() == 0.0);

    Matrix ones(2, 2);
    ones << 1, 1, 1, 1;
    const Matrix out = apply_map({2, 1.0, 2.0}, ones);
    CHECK((out - real4({{3, 0, 2, 0}, {0, 2, 1, 2}, {2, 1, 2, 0}, {0, 2, 0, 3}}))
              .norm() == 0.0);

    // Direct substitution of the first reference input at (3/4, -2).
    const Matrix out1 = apply_map({2, 0.75, -2.0}, a1());
    const Matrix expected = real4({{-5.0 / 8.0, 0, 1.0 / 3.0, 0},
                                   {0, 3.0 / 8.0, -1, 1.0 / 3.0},
                                   {1.0 / 3.0, -1, 3, 0},
                                   {0, 1.0 / 3.0, 0, 2}});
    CHECK((out1 - expected).cwiseAbs().maxCoeff() <= 1e-15);

    CHECK_THROWS_AS(apply_map({2, 1.0, 0.0}, Matrix::Identity(3, 3)),
                    DimensionMismatch);
    CHECK_THROWS_AS(apply_map({1, 1.0, 0.0}, Matrix::Identity(1, 1)),
                    BadDimension);
}

TEST_CASE("apply_map: general n output structure") {
    const Matrix out = apply_map({3, 1.0, 1.5}, Matrix::Identity(3, 3));
    CHECK(out.rows() == 9);
    // alpha (A + A^T) (x) I adds 2 on the diagonal; the swap term adds
    // beta/n on the matching positions.
    CHECK(out(0, 0) == Complex(2.0 + 0.5));
    CHECK(out(1, 3) == Complex(0.5));
    CHECK(out(1, 1) == Complex(2.0));
}

TEST_CASE("closed_form_2x2 equals apply_map exactly on random draws") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> sym(-2.0, 2.0);
    std::uniform_real_distribution<double> pos(0.0, 2.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const MapParams params{2, sym(rng), sym(rng)};
        const Input2x2 in{pos(rng), sym(rng), sym(rng), pos(rng)};
        Matrix a(2, 2);
        a << in.a, in.b, in.c, in.d;
        CHECK((closed_form_2x2(params, in) - apply_map(params, a))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
}

TEST_CASE("closed_form_2x2: diagonal input") {
    const Matrix out = closed_form_2x2({2, 1.0, 0.0}, {1.0, 0.0, 0.0, 1.0});
    CHECK((out - 2.0 * Matrix::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("closed_form_2x2: template at (alpha, -gamma) on the first input") {
    for (double alpha : {0.3, 0.75, 1.7}) {
        for (double gamma : {0.4, 2.0}) {
            const Matrix out =
                closed_form_2x2({2, alpha, -gamma},
                                {0.25, 1.0 / 3.0, 1.0 / 9.0, 2.0});
            const Matrix expected =
                real4({{alpha / 2 - gamma / 2, 0, 4 * alpha / 9, 0},
                       {0, alpha / 2, -gamma / 2, 4 * alpha / 9},
                       {4 * alpha / 9, -gamma / 2, 4 * alpha, 0},
                       {0, 4 * alpha / 9, 0, 4 * alpha - gamma / 2}});
            CHECK((out - expected).cwiseAbs().maxCoeff() <= 1e-15);
        }
    }
}

TEST_CASE("block_split: template blocks and contraction") {
    const MapParams params{2, 1.0, 4.0};
    const Input2x2 in{1.0, 1.5, 0.5, 2.0};
    const Matrix out = closed_form_2x2(params, in);
    const BlockSplit split = block_split(out);

    Matrix x(2, 2), y(2, 2), z(2, 2);
    x << 2 * in.a * params.alpha + params.beta / 2, 0, 0,
        2 * in.a * params.alpha;
    y << params.alpha * (in.b + in.c), 0, params.beta / 2,
        params.alpha * (in.b + in.c);
    z << 2 * in.d * params.alpha, 0, 0,
        2 * in.d * params.alpha + params.beta / 2;
    CHECK((split.x - x).norm() == 0.0);
    CHECK((split.y - y).norm() == 0.0);
    CHECK((split.z - z).norm() == 0.0);

    // Reassembly is exact.
    Matrix back(4, 4);
    back.block(0, 0, 2, 2) = split.x;
    back.block(0, 2, 2, 2) = split.y;
    back.block(2, 0, 2, 2) = split.y.adjoint();
    back.block(2, 2, 2, 2) = split.z;
    CHECK((back - out).norm() == 0.0);
}

TEST_CASE("block_split: contraction special cases") {
    // a=d=b=c=1, alpha=1, beta=0: V = I.
    BlockSplit split =
        block_split(closed_form_2x2({2, 1.0, 0.0}, {1.0, 1.0, 1.0, 1.0}));
    REQUIRE(split.contraction.has_value());
    CHECK((*split.contraction - Matrix::Identity(2, 2)).norm() <= 1e-12);
    CHECK(operator_norm(*split.contraction) == doctest::Approx(1.0));

    // Y = 0 gives V = 0.
    split = block_split(closed_form_2x2({2, 1.0, 0.0}, {1.0, 0.0, 0.0, 1.0}));
    REQUIRE(split.contraction.has_value());
    CHECK(split.contraction->norm() == 0.0);

    // X not PSD: contraction absent with a reason.
    split = block_split(closed_form_2x2({2, 1.0, -10.0}, {1.0, 0.0, 0.0, 1.0}));
    CHECK_FALSE(split.contraction.has_value());
    CHECK(split.absent_reason.find("BlocksNotPsd") != std::string::npos);
}

TEST_CASE("analytic_contraction: closed form vs examples") {
    const Matrix identity =
        analytic_contraction({1.0, 1.0, 1.0, 1.0}, {2, 1.0, 0.0});
    CHECK((identity - Matrix::Identity(2, 2)).norm() <= 1e-15);

    const Matrix zero =
        analytic_contraction({1.0, 0.0, 0.0, 2.0}, {2, 1.0, 0.0});
    CHECK(zero.norm() == 0.0);

    const Matrix v = analytic_contraction({1.0, 1.0, 1.0, 1.0}, {2, 1.0, 4.0});
    CHECK(std::abs(v(0, 0) - Complex(2.0 / std::sqrt(8.0))) <= 1e-15);
    CHECK(std::abs(v(1, 0) - Complex(1.0)) <= 1e-15);
    CHECK(std::abs(v(1, 1) - Complex(2.0 / std::sqrt(8.0))) <= 1e-15);
    CHECK(v(0, 1) == Complex(0.0));

    CHECK_THROWS_AS(analytic_contraction({0.0, 1.0, 1.0, 1.0}, {2, 1.0, 0.0}),
                    SingularBlock);
    CHECK_THROWS_AS(analytic_contraction({1.0, 1.0, 1.0, 1.0}, {2, 1.0, -5.0}),
                    SingularBlock);
}

TEST_CASE("analytic_contraction matches the numeric contraction") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> pos(0.1, 2.0);
    std::uniform_real_distribution<double> sym(-2.0, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 0.99);
    const Tolerances tol;
    for (int trial = 0; trial < 300; ++trial) {
        const double a = pos(rng), d = pos(rng), alpha = pos(rng);
        const double low = -4.0 * std::min(a, d) * alpha;
        const double beta = low * unit(rng) + 4.0 * (1.0 - unit(rng));
        if (4.0 * a * alpha + beta <= 0.0 || 4.0 * d * alpha + beta <= 0.0) {
            continue;
        }
        const Input2x2 in{a, sym(rng), sym(rng), d};
        const MapParams params{2, alpha, beta};
        const BlockSplit split = block_split(closed_form_2x2(params, in));
        REQUIRE(split.contraction.has_value());
        const Matrix v = analytic_contraction(in, params);
        CHECK((v - *split.contraction).cwiseAbs().maxCoeff() <= tol.eps_match);
    }
}

TEST_CASE("analytic_char_coeffs: agreement and disagreement instances") {
    // a=d=b=c=1, alpha=1, beta=0: both routes give lambda1 = lambda2 = 1.
    CharCoeffs cc = analytic_char_coeffs({1, 1, 1, 1}, {2, 1.0, 0.0});
    CHECK(cc.k1 == doctest::Approx(2.0));
    CHECK(cc.k2 == doctest::Approx(4.0));
    REQUIRE(cc.lambda1.has_value());
    CHECK(*cc.lambda1 == doctest::Approx(1.0));
    CHECK(*cc.lambda2 == doctest::Approx(1.0));
    REQUIRE(cc.gram_trace.has_value());
    CHECK(*cc.gram_trace == doctest::Approx(2.0));
    CHECK(4.0 * *cc.gram_det == doctest::Approx(4.0));

    // V = 0 yet k1 carries the standalone d/a term.
    cc = analytic_char_coeffs({1, 0, 0, 2}, {2, 1.0, 0.0});
    CHECK(cc.k1 == doctest::Approx(2.0));
    REQUIRE(cc.gram_trace.has_value());
    CHECK(*cc.gram_trace == doctest::Approx(0.0));

    // k2/4 = 1 but det(V^dag V) = 1/4.
    cc = analytic_char_coeffs({1, 1, 1, 1}, {2, 1.0, 4.0});
    CHECK(cc.k2 / 4.0 == doctest::Approx(1.0));
    REQUIRE(cc.gram_det.has_value());
    CHECK(*cc.gram_det == doctest::Approx(0.25));

    CHECK_THROWS_AS(analytic_char_coeffs({1, 1, 1, 0}, {2, 1.0, 0.0}),
                    SingularBlock);
}

TEST_CASE("analytic_positivity_conditions") {
    // alpha >= 0, beta = 0, PSD input: the output really is PSD.
    PositivityConditions pc =
        analytic_positivity_conditions({1.0, 0.5, 0.5, 2.0}, {2, 1.5, 0.0});
    CHECK(pc.output_psd);
    CHECK(pc.x_block == Flag::Holds);
    CHECK(pc.z_block == Flag::Holds);
    CHECK(pc.aggregate == Flag::Holds);

    // Aggregate 2 alpha (a+d) + beta = -4 < 0 and the output is indefinite.
    pc = analytic_positivity_conditions({1.0, 0.0, 0.0, 1.0}, {2, 1.0, -8.0});
    CHECK(pc.aggregate == Flag::Fails);
    CHECK_FALSE(pc.output_psd);

    // First reference input at alpha = 0.38 gamma, gamma = 2: the claimed
    // threshold 9 gamma / (2 sqrt(146)) ~ 0.745 is satisfied by alpha = 0.76
    // yet the output has a negative diagonal entry.
    const double gamma = 2.0;
    const double alpha = 0.38 * gamma;
    CHECK(alpha >= 9.0 * gamma / (2.0 * std::sqrt(146.0)));
    pc = analytic_positivity_conditions({0.25, 1.0 / 3.0, 1.0 / 9.0, 2.0},
                                        {2, alpha, -gamma});
    CHECK_FALSE(pc.output_psd);
    CHECK(pc.min_eigenvalue < 0.0);

    // Division by zero in the k1/k2 formulas comes back Inapplicable.
    pc = analytic_positivity_conditions({0.0, 1.0, 1.0, 1.0}, {2, 1.0, 0.0});
    CHECK(pc.contraction_bound == Flag::Inapplicable);
}

TEST_CASE("block PSD equivalence on positive definite blocks") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> pos(0.1, 2.0);
    std::uniform_real_distribution<double> sym(-2.0, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 0.999);
    for (int trial = 0; trial < 500; ++trial) {
        const double a = pos(rng), d = pos(rng), alpha = pos(rng);
        const double low = -4.0 * std::min(a, d) * alpha;
        const double u = unit(rng);
        const double beta = low * u + 4.0 * (1.0 - u);
        const Input2x2 in{a, sym(rng), sym(rng), d};
        const Matrix out = closed_form_2x2({2, alpha, beta}, in);
        const BlockSplit split = block_split(out);
        REQUIRE(split.contraction.has_value());
        const bool contraction =
            operator_norm(*split.contraction) <= 1.0 + 1e-9;
        CHECK(is_psd(out).is_psd == contraction);
    }
}

TEST_CASE("PSD-ness is monotone in alpha for beta = -gamma") {
    const double gamma = 2.0;
    for (const Matrix& a : {Matrix(Matrix::Identity(2, 2)), a1()}) {
        bool seen_psd = false;
        for (int k = 0; k <= 24; ++k) {
            const double alpha = 0.125 * k;
            const bool psd = is_psd(apply_map({2, alpha, -gamma}, a)).is_psd;
            if (seen_psd) CHECK(psd);
            seen_psd = seen_psd || psd;
        }
        CHECK(seen_psd);
    }
}

TEST_CASE("beta = 0 outputs are PSD for complex PSD inputs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix g = random_complex(rng, 2, 2);
        const Matrix a = g * g.adjoint();
        for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
            CHECK(is_psd(apply_map({2, alpha, 0.0}, a)).min_eigenvalue >=
                  -1e-9);
        }
    }
}

TEST_CASE("min_alpha_threshold") {
    CHECK(min_alpha_threshold(Matrix::Identity(2, 2), 2.0) ==
          doctest::Approx(0.5).epsilon(1e-7));
    CHECK(min_alpha_threshold(Matrix::Identity(2, 2), 4.0) ==
          doctest::Approx(1.0).epsilon(1e-7));

    const double tol = 1e-9;
    const double star = min_alpha_threshold(a1(), 2.0, tol);
    CHECK(star >= 2.0);
    CHECK(star == doctest::Approx(2.25).epsilon(1e-6));
    CHECK(is_psd(apply_map({2, star, -2.0}, a1())).is_psd);
    CHECK_FALSE(is_psd(apply_map({2, star - tol, -2.0}, a1())).is_psd);

    Matrix sing = Matrix::Zero(2, 2);
    sing(0, 0) = 1.0;
    CHECK_THROWS_AS(min_alpha_threshold(sing, 2.0), NoUpperBracket);
    CHECK_THROWS_AS(min_alpha_threshold(Matrix::Identity(2, 2), -1.0),
                    ParameterOutOfRange);
    Matrix indef = Matrix::Zero(2, 2);
    indef.diagonal() << 1.0, -1.0;
    CHECK_THROWS_AS(min_alpha_threshold(indef, 2.0), NotPsd);
}
