#include <doctest.h>

#include "jacsyz/parser.hpp"
#include "jacsyz/syzygy.hpp"

using namespace jacsyz;

namespace {

Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(s, R); }

PolyVec col(const RingPtr& R, std::initializer_list<const char*> es) {
    PolyVec v;
    for (auto e : es) v.push_back(P(R, e));
    return v;
}

bool is_syzygy(const PolyVec& w, const PolyVec& gens) {
    Polynomial acc = Polynomial::zero(gens[0].ring());
    for (std::size_t i = 0; i < w.size(); ++i) acc = acc + w[i] * gens[i];
    return acc.is_zero();
}

bool same_span(const std::vector<PolyVec>& A, const std::vector<PolyVec>& B,
               const RingPtr& R) {
    for (const auto& a : A)
        if (!syzdetail::member_of(a, B, R, {})) return false;
    for (const auto& b : B)
        if (!syzdetail::member_of(b, A, R, {})) return false;
    return true;
}

} // namespace

TEST_CASE("syzygies of (x0, x1) are generated by the Koszul relation") {
    auto R = Ring::projective(2);
    auto syz = syzygies_of({{P(R, "x0")}, {P(R, "x1")}}, R);
    GradedMatrix M = minimalize(syz, R, {0, 0});
    REQUIRE(M.ncols() == 1);
    CHECK(M.col_shifts[0] == 1);
    // the generator is (x1, -x0) up to sign
    CHECK(is_syzygy(M.columns[0], {P(R, "x0"), P(R, "x1")}));
    CHECK_FALSE(M.columns[0][0].is_zero());
}

TEST_CASE("nodal cubic is a 4-syzygy curve with exponents (2,2,2,2)") {
    auto R = Ring::projective(2);
    Polynomial f = P(R, "x1^2*x2 - x0^2*(x0 + x2)");
    FirstSyzygies fs = first_syzygies(f);
    REQUIRE(fs.res.m == 4);
    CHECK(fs.res.exponents == std::vector<long>{2, 2, 2, 2});
    PolyVec df = jacobian(f);
    for (const auto& c : fs.Mf.columns) CHECK(is_syzygy(c, df));

    // oracle: brute-force the coefficient system of a would-be linear syzygy
    // A_0 f_0 + A_1 f_1 + A_2 f_2 = 0 and confirm it only has the trivial
    // solution, so d_1 = 2 really is minimal
    std::vector<Polynomial> basis;
    for (std::size_t i = 0; i < 3; ++i)       // which partial the term scales
        for (std::size_t v = 0; v < 3; ++v) { // which variable the term is
            basis.push_back(Polynomial::variable(R, v) * df[i]);
        }
    // collect the cubic monomial coefficients of each product into columns
    std::map<std::vector<unsigned>, std::vector<Rational>> rows;
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (const auto& t : basis[k].terms()) {
            auto& row = rows[t.mono.exponents()];
            row.resize(basis.size(), Rational(0));
            row[k] += t.coeff.coords()[0];
        }
    // Gaussian elimination: rank must be 9 (only the zero combination)
    std::vector<std::vector<Rational>> mat;
    for (auto& [_, row] : rows) {
        row.resize(basis.size(), Rational(0));
        mat.push_back(row);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < basis.size(); ++c) {
        std::size_t piv = rank;
        while (piv < mat.size() && mat[piv][c] == 0) ++piv;
        if (piv == mat.size()) continue;
        std::swap(mat[rank], mat[piv]);
        for (std::size_t r2 = 0; r2 < mat.size(); ++r2) {
            if (r2 == rank || mat[r2][c] == 0) continue;
            Rational s = mat[r2][c] / mat[rank][c];
            for (std::size_t cc = 0; cc < basis.size(); ++cc)
                mat[r2][cc] -= s * mat[rank][cc];
        }
        ++rank;
    }
    CHECK(rank == 9);
}

TEST_CASE("3-syzygy quintic: exponents, e_j, and printed matrices") {
    auto R = Ring::projective(2);
    Polynomial f = P(R, "x0^2*x1^3 + 3*x1^5 - 4*x0*x1^3*x2 + x0^2*x1*x2^2");
    FirstSyzygies fs = first_syzygies(f);
    REQUIRE(fs.res.m == 3);
    CHECK(fs.res.exponents == std::vector<long>{2, 3, 4});
    GradedMatrix Pf = second_syzygies(f, fs.Mf, fs.res);
    REQUIRE(Pf.ncols() == 1);
    CHECK(fs.res.e == std::vector<long>{9});
    CHECK(fs.res.epsilons == std::vector<long>{1});
    for (const auto& c : matrix_product(fs.Mf, Pf))
        for (const auto& p : c) CHECK(p.is_zero());

    // published matrices: columns are syzygies, their product vanishes, and
    // the printed first-syzygy columns span the same module as ours
    GradedMatrix Mp;
    Mp.ring = R;
    Mp.nrows = 3;
    Mp.row_shifts = {0, 0, 0};
    Mp.col_shifts = {2, 3, 4};
    Mp.columns = {
        col(R, {"6*x0^2 - 5*x0*x2", "-4*x0*x1", "-15*x1^2 - 4*x0*x2 + 5*x2^2"}),
        col(R, {"12*x0*x1^2 - 5*x0*x2^2", "-4*x0*x1*x2",
                "6*x0*x1^2 - 27*x1^2*x2 + 2*x0*x2^2 + 5*x2^3"}),
        col(R, {"30*x1^4 - 27*x0*x1^2*x2 + 5*x0*x2^3", "8*x1^3*x2",
                "15*x1^4 + 18*x1^2*x2^2 - 5*x2^4"}),
    };
    Mp.check_grading();
    PolyVec df = jacobian(f);
    for (const auto& c : Mp.columns) CHECK(is_syzygy(c, df));
    CHECK(same_span(Mp.columns, fs.Mf.columns, R));

    GradedMatrix Pp;
    Pp.ring = R;
    Pp.nrows = 3;
    Pp.row_shifts = Mp.col_shifts;
    Pp.col_shifts = {5};
    Pp.columns = {col(R, {"27*x1^2*x2 - 5*x2^3", "-15*x1^2 + 5*x2^2", "6*x0"})};
    Pp.check_grading();
    for (const auto& c : matrix_product(Mp, Pp))
        for (const auto& p : c) CHECK(p.is_zero());

    CHECK(tau_from_resolution(5, fs.res) == 10);
}

TEST_CASE("4-syzygy sextic over Q(i): exponents (3,4,4,4) and two second syzygies") {
    auto Qi = parse_field("Q(i) minpoly t^2+1");
    auto R = Ring::make({"x0", "x1", "x2"}, Qi);
    Polynomial f = P(R, "(x0^2 + x1^2)^3 - 4*x0^2*x1^2*x2^2");
    FirstSyzygies fs = first_syzygies(f);
    REQUIRE(fs.res.m == 4);
    CHECK(fs.res.exponents == std::vector<long>{3, 4, 4, 4});
    GradedMatrix Pf = second_syzygies(f, fs.Mf, fs.res);
    CHECK(Pf.ncols() == 2);
    CHECK(fs.res.e == std::vector<long>{10, 10});
    CHECK(tau_from_resolution(6, fs.res) == 16);
    for (const auto& c : matrix_product(fs.Mf, Pf))
        for (const auto& p : c) CHECK(p.is_zero());
}

TEST_CASE("5-syzygy sextic: exponents (4,4,5,5,5)") {
    auto R = Ring::projective(2);
    Polynomial f = P(R, "x1^6 + x0^2*x1^2*x2^2 + x2^6");
    FirstSyzygies fs = first_syzygies(f);
    REQUIRE(fs.res.m == 5);
    CHECK(fs.res.exponents == std::vector<long>{4, 4, 5, 5, 5});
    GradedMatrix Pf = second_syzygies(f, fs.Mf, fs.res);
    CHECK(Pf.ncols() == 3);
    CHECK(tau_from_resolution(6, fs.res) == 12);
}

TEST_CASE("Koszul lift satisfies M_f * N = K") {
    auto R = Ring::projective(2);
    for (const char* fs_str : {"x1^2*x2 - x0^3 - x0^2*x2",
                               "x0^2*x1^3 + 3*x1^5 - 4*x0*x1^3*x2 + x0^2*x1*x2^2",
                               "x1^6 + x0^2*x1^2*x2^2 + x2^6"}) {
        Polynomial f = P(R, fs_str);
        FirstSyzygies fs = first_syzygies(f);
        GradedMatrix N = lift_koszul(f, fs.Mf);
        auto K = koszul_columns(f);
        auto MN = matrix_product(fs.Mf, N);
        REQUIRE(MN.size() == 3);
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 3; ++i)
                CHECK((MN[j][i] - K[j][i]).is_zero());
    }
}

TEST_CASE("Koszul lift through the partials of a quadric is immediate") {
    // partials of (x0^2+x1^2+x2^2)/2 are the coordinates themselves
    auto R = Ring::projective(2);
    Polynomial f = P(R, "1/2*x0^2 + 1/2*x1^2 + 1/2*x2^2");
    FirstSyzygies fs = first_syzygies(f);
    CHECK(fs.res.m == 3);
    CHECK(fs.res.exponents == std::vector<long>{1, 1, 1});
    GradedMatrix N = lift_koszul(f, fs.Mf);
    auto K = koszul_columns(f);
    auto MN = matrix_product(fs.Mf, N);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i)
            CHECK((MN[j][i] - K[j][i]).is_zero());
}

TEST_CASE("P^3 fixture is an 8-syzygy hypersurface") {
    auto R = Ring::projective(3);
    Polynomial f = P(R, "x0^3*x3 + x1^4 + x1*x2^2*x3 + x0*x1^3");
    FirstSyzygies fs = first_syzygies(f);
    CHECK(fs.res.m == 8);
    PolyVec df = jacobian(f);
    for (const auto& c : fs.Mf.columns) CHECK(is_syzygy(c, df));
}

TEST_CASE("cone input is rejected") {
    auto R = Ring::projective(2);
    CHECK_THROWS_AS((void)first_syzygies(P(R, "x0^3 + x1^3")), PreconditionError);
}
