#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Eigenvalues>

#include "a_table.hpp"
#include "ldaha/module_w.hpp"

namespace ldaha {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;
using Wide = std::complex<Real>;

Wide widen(CScalar x) { return {Real(x.real()), Real(x.imag())}; }

}  // namespace

std::vector<CScalar> a_C_eigenvalues_extended(const QRacahParams &p) {
    const int d = p.d;
    const Wide one(Real(1)), q = widen(p.q), s = widen(p.s), ss = widen(p.sstar), r1 = widen(p.r1);
    auto power = [&](int n) {
        Wide r = one;
        for (int j = 0; j < n; ++j) r *= q;
        return r;
    };
    // r2 and h from their defining relations, so the table is that of the
    // seeds exactly rather than of their double-rounded derived values.
    const Wide r2 = s * ss * power(d + 1) / r1;
    const Wide h = ss * power(d) * (one - ss * power(2)) * (one - ss * power(3)) /
                   ((one - q) * (one - ss * power(d + 2)) * (r1 - ss * q) * (r2 - ss * q));

    using Mat = Eigen::Matrix<Wide, Eigen::Dynamic, Eigen::Dynamic>;
    Mat m = Mat::Zero(2 * d, 2 * d);
    detail::a_table_C<Wide>(d, q, ss, r1, r2, h, widen(p.theta0), [&](int i, int j, const Wide &v) { m(i, j) = v; });
    const Eigen::ComplexEigenSolver<Mat> solver(m, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("extended eigenvalue iteration did not converge");

    std::vector<CScalar> out;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const Wide &ev = solver.eigenvalues()[k];
        out.emplace_back(static_cast<double>(ev.real()), static_cast<double>(ev.imag()));
    }
    return out;
}

}  // namespace ldaha
