#include "repspace/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "repspace/errors.hpp"

namespace repspace
{

namespace
{

std::string fmt(double v)
{
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

void check_sign(int s)
{
    if (s != 1 && s != -1)
        throw Unsupported("sign entries must be +1 or -1, got " + std::to_string(s));
}

} // namespace

UnitQuaternion::UnitQuaternion(double w, double x, double y, double z) : q_(w, x, y, z)
{
    const double norm = q_.norm();
    if (!(norm > 1e-12))
        throw Unsupported("cannot normalize a zero quaternion");
    q_.coeffs() /= norm;
}

UnitQuaternion::UnitQuaternion(const Eigen::Quaterniond& q) : UnitQuaternion(q.w(), q.x(), q.y(), q.z()) {}

UnitQuaternion UnitQuaternion::rotation(const Eigen::Vector3d& axis, double angle)
{
    return UnitQuaternion(Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis.normalized())));
}

UnitQuaternion UnitQuaternion::from_rotation(const Eigen::Matrix3d& r)
{
    return UnitQuaternion(Eigen::Quaterniond(r));
}

UnitQuaternion UnitQuaternion::operator*(const UnitQuaternion& o) const
{
    return UnitQuaternion(q_ * o.q_);
}

UnitQuaternion UnitQuaternion::operator-() const
{
    return {-w(), -x(), -y(), -z()};
}

UnitQuaternion UnitQuaternion::inverse() const
{
    return UnitQuaternion(q_.conjugate());
}

UnitQuaternion UnitQuaternion::pow(int e) const
{
    UnitQuaternion base = e < 0 ? inverse() : *this;
    UnitQuaternion out;
    for (int t = 0; t < std::abs(e); ++t)
        out = out * base;
    return out;
}

Eigen::Matrix3d UnitQuaternion::rotation_matrix() const
{
    return q_.toRotationMatrix();
}

double UnitQuaternion::distance(const UnitQuaternion& o) const
{
    return (q_.coeffs() - o.q_.coeffs()).norm();
}

std::string UnitQuaternion::to_string() const
{
    std::ostringstream out;
    out << "(" << w() << ", " << x() << ", " << y() << ", " << z() << ")";
    return out.str();
}

// ---------------------------------------------------------------------------

SignMatrix::SignMatrix(int n) : n_(n), s_(static_cast<std::size_t>(n * n), 1) {}

SignMatrix SignMatrix::from_type(const TypeMatrix& t)
{
    SignMatrix c(t.n);
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j)
            c.set(i, j, t.at(i, j) % 2 ? -1 : 1);
    return c;
}

void SignMatrix::set(int i, int j, int sign)
{
    check_sign(sign);
    if (i == j && sign != 1)
        throw TypeMismatch("diagonal entries of a sign matrix are +1");
    s_[static_cast<std::size_t>(i * n_ + j)] = sign;
    s_[static_cast<std::size_t>(j * n_ + i)] = sign;
}

bool SignMatrix::is_trivial() const
{
    return std::all_of(s_.begin(), s_.end(), [](int s) { return s == 1; });
}

TypeMatrix SignMatrix::to_type() const
{
    TypeMatrix t{n_, {}};
    for (int s : s_)
        t.entries.push_back(s == 1 ? 0 : 1);
    return t;
}

std::string SignMatrix::to_string() const
{
    std::string out = "[";
    for (int i = 0; i < n_; ++i)
    {
        out += i ? ",[" : "[";
        for (int j = 0; j < n_; ++j)
            out += std::string(j ? "," : "") + (at(i, j) > 0 ? "+" : "-");
        out += "]";
    }
    return out + "]";
}

// ---------------------------------------------------------------------------

UnitQuaternion commutator(const UnitQuaternion& x, const UnitQuaternion& y)
{
    return x * y * x.inverse() * y.inverse();
}

double central_defect(const UnitQuaternion& q)
{
    const auto one = UnitQuaternion::identity();
    return std::min(q.distance(one), q.distance(-one));
}

double commutator_defect(const SU2Tuple& t)
{
    double worst = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            worst = std::max(worst, central_defect(commutator(t.elements[i], t.elements[j])));
    return worst;
}

namespace
{

template <typename Error>
SignMatrix signs_of(const std::vector<UnitQuaternion>& x, double tol)
{
    if (x.empty())
        throw Unsupported("tuples have length >= 1");
    const int n = static_cast<int>(x.size());
    SignMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
        {
            const auto q = commutator(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]);
            const double to_plus = q.distance(UnitQuaternion::identity());
            const double to_minus = q.distance(-UnitQuaternion::identity());
            if (std::min(to_plus, to_minus) > tol)
                throw Error("commutator of elements " + std::to_string(i) + " and " + std::to_string(j) +
                            " is at distance " + fmt(std::min(to_plus, to_minus)) + " from the centre");
            c.set(i, j, to_plus <= to_minus ? 1 : -1);
        }
    return c;
}

} // namespace

SignMatrix commutator_type(const SU2Tuple& t)
{
    return signs_of<NotAlmostCommuting>(t.elements, t.tol);
}

SU2Tuple psi_construct(const UnitQuaternion& xi, const UnitQuaternion& xj, const std::vector<int>& w,
                       const SignMatrix& c, int i, int j, double tol)
{
    const int n = c.size();
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        throw Unsupported("psi needs two distinct base positions inside the tuple");
    if (static_cast<int>(w.size()) != n - 2)
        throw Unsupported("psi needs n - 2 = " + std::to_string(n - 2) + " signs, got " + std::to_string(w.size()));
    const auto base = commutator(xi, xj);
    if (base.distance(-UnitQuaternion::identity()) > tol)
        throw BadBasePair("[x_i, x_j] is at distance " + fmt(base.distance(-UnitQuaternion::identity())) +
                          " from -1");
    if (c.at(i, j) != -1)
        throw TypeMismatch("C has c_ij = +1 but the base pair has commutator -1");

    // Exponents are read off the base rows: c_ik = c^{b_k}, c_jk = c^{a_k}.
    std::vector<int> a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(i)] = 1;
    b[static_cast<std::size_t>(j)] = 1;
    for (int k = 0; k < n; ++k)
        if (k != i && k != j)
        {
            b[static_cast<std::size_t>(k)] = c.at(i, k) == -1;
            a[static_cast<std::size_t>(k)] = c.at(j, k) == -1;
        }
    // The remaining entries are forced: c_kl = c^{a_k b_l + a_l b_k}.
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
        {
            const int parity = (a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(l)] +
                                a[static_cast<std::size_t>(l)] * b[static_cast<std::size_t>(k)]) %
                               2;
            if (c.at(k, l) != (parity ? -1 : 1))
                throw TypeMismatch("entry (" + std::to_string(k) + "," + std::to_string(l) + ") of " + c.to_string() +
                                   " is not reachable from the base pair");
        }

    SU2Tuple t{std::vector<UnitQuaternion>(static_cast<std::size_t>(n)), tol};
    std::size_t next = 0;
    for (int k = 0; k < n; ++k)
    {
        if (k == i)
            t.elements[static_cast<std::size_t>(k)] = xi;
        else if (k == j)
            t.elements[static_cast<std::size_t>(k)] = xj;
        else
        {
            const int s = w[next++];
            check_sign(s);
            const auto y = xi.pow(a[static_cast<std::size_t>(k)]) * xj.pow(b[static_cast<std::size_t>(k)]);
            t.elements[static_cast<std::size_t>(k)] = s == 1 ? y : -y;
        }
    }
    return t;
}

SignMatrix classify_so3_tuple(const std::vector<UnitQuaternion>& lifts, double tol)
{
    return signs_of<NotCommutingInSO3>(lifts, tol);
}

SignMatrix classify_so3_tuple(const std::vector<Eigen::Matrix3d>& rotations, double tol)
{
    std::vector<UnitQuaternion> lifts;
    for (const auto& r : rotations)
        lifts.push_back(UnitQuaternion::from_rotation(r));
    return classify_so3_tuple(lifts, tol);
}

// ---------------------------------------------------------------------------

UnitQuaternion random_unit(std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    for (;;)
    {
        const double w = g(rng), x = g(rng), y = g(rng), z = g(rng);
        if (w * w + x * x + y * y + z * z > 1e-6)
            return {w, x, y, z};
    }
}

std::pair<UnitQuaternion, UnitQuaternion> random_anticommuting_pair(std::mt19937_64& rng)
{
    const auto g = random_unit(rng);
    return {g * UnitQuaternion::i() * g.inverse(), g * UnitQuaternion::j() * g.inverse()};
}

SU2Tuple random_torus_tuple(int n, std::uint64_t seed)
{
    if (n < 1)
        throw Unsupported("tuples have length >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    const auto g = random_unit(rng);
    SU2Tuple t;
    for (int k = 0; k < n; ++k)
    {
        const double theta = angle(rng);
        t.elements.push_back(g * UnitQuaternion(std::cos(theta), std::sin(theta), 0, 0) * g.inverse());
    }
    return t;
}

SU2Tuple conjugate_tuple(const UnitQuaternion& g, const SU2Tuple& t)
{
    SU2Tuple out{{}, t.tol};
    const auto gi = g.inverse();
    for (const auto& x : t.elements)
        out.elements.push_back(g * x * gi);
    return out;
}

SU2Tuple realize_type(const SignMatrix& c, std::mt19937_64& rng, double tol)
{
    const int n = c.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (c.at(i, j) == -1)
            {
                const auto [xi, xj] = random_anticommuting_pair(rng);
                std::vector<int> w;
                std::bernoulli_distribution coin;
                for (int k = 0; k < n - 2; ++k)
                    w.push_back(coin(rng) ? 1 : -1);
                return psi_construct(xi, xj, w, c, i, j, tol);
            }
    SU2Tuple t = random_torus_tuple(n, rng());
    t.tol = tol;
    return t;
}

nlohmann::json PsiReport::to_json() const
{
    return {{"n", n},
            {"runs", runs},
            {"failures", failures},
            {"type_mismatches", type_mismatches},
            {"max_commutator_defect", max_commutator_defect},
            {"failed_types", failed_types}};
}

PsiReport verify_psi(int n, long runs, std::uint64_t seed, double tol)
{
    if (n < 1 || n > 5)
        throw ResourceGuard("verify_psi supports 1 <= n <= 5");
    const auto types = enumerate_types(n, AbelianGroup::cyclic(2));
    std::mt19937_64 rng(seed);
    PsiReport report;
    report.n = n;
    std::vector<bool> failed(types.size(), false);
    for (long r = 0; r < runs; ++r)
    {
        const std::size_t which = static_cast<std::size_t>(r) % types.size();
        const SignMatrix c = SignMatrix::from_type(types[which]);
        ++report.runs;
        bool ok = false;
        try
        {
            const SU2Tuple t = realize_type(c, rng, tol);
            const double defect = commutator_defect(t);
            report.max_commutator_defect = std::max(report.max_commutator_defect, defect);
            ok = defect < tol && commutator_type(t) == c;
        }
        catch (const TypeMismatch&)
        {
            ++report.type_mismatches;
        }
        if (!ok)
        {
            ++report.failures;
            if (!failed[which])
                report.failed_types.push_back(c.to_string());
            failed[which] = true;
        }
    }
    return report;
}

So3Report verify_so3_invariance(int n, long runs, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> position(0, n - 1);
    const UnitQuaternion klein[] = {UnitQuaternion::identity(), UnitQuaternion::i(), UnitQuaternion::j(),
                                    UnitQuaternion::k()};
    So3Report report;
    for (long r = 0; r < runs; ++r)
    {
        // Alternate between a common rotation axis and the Klein four-group.
        std::vector<UnitQuaternion> lifts;
        const auto g = random_unit(rng);
        for (int k = 0; k < n; ++k)
        {
            const double theta = angle(rng);
            const auto x = r % 2 ? klein[pick(rng)] : UnitQuaternion(std::cos(theta), 0, 0, std::sin(theta));
            lifts.push_back(g * (rng() % 2 ? x : -x) * g.inverse());
        }
        ++report.runs;
        try
        {
            const SignMatrix c = classify_so3_tuple(lifts);
            std::vector<Eigen::Matrix3d> rotations;
            for (const auto& x : lifts)
                rotations.push_back(x.rotation_matrix());
            auto conjugated = conjugate_tuple(random_unit(rng), SU2Tuple{lifts, 1e-9}).elements;
            auto flipped = lifts;
            const int p = position(rng);
            flipped[static_cast<std::size_t>(p)] = -flipped[static_cast<std::size_t>(p)];
            const bool ok = classify_so3_tuple(conjugated) == c && classify_so3_tuple(flipped) == c &&
                            classify_so3_tuple(rotations) == c && (r % 2 == 1 || c.is_trivial());
            report.failures += !ok;
        }
        catch (const Error&)
        {
            ++report.failures;
        }
    }
    return report;
}

} // namespace repspace
