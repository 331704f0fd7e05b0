#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Geometry>
#include <json.hpp>

#include "repspace/counting.hpp"

namespace repspace
{

/**
 * Element of SU(2) as a unit quaternion w + xi + yj + zk. Every constructor and
 * product renormalizes. SO(3) elements are represented by either lift.
 */
class UnitQuaternion
{
public:
    UnitQuaternion() = default;
    /// Throws Unsupported for a (numerically) zero quaternion.
    UnitQuaternion(double w, double x, double y, double z);
    explicit UnitQuaternion(const Eigen::Quaterniond& q);

    static UnitQuaternion identity() { return {}; }
    static UnitQuaternion i() { return {0, 1, 0, 0}; }
    static UnitQuaternion j() { return {0, 0, 1, 0}; }
    static UnitQuaternion k() { return {0, 0, 0, 1}; }
    /// exp(angle/2 * axis): the lift of rotation by `angle` about `axis`.
    static UnitQuaternion rotation(const Eigen::Vector3d& axis, double angle);
    /// Either lift of a rotation matrix.
    static UnitQuaternion from_rotation(const Eigen::Matrix3d& r);

    double w() const { return q_.w(); }
    double x() const { return q_.x(); }
    double y() const { return q_.y(); }
    double z() const { return q_.z(); }
    const Eigen::Quaterniond& eigen() const { return q_; }

    UnitQuaternion operator*(const UnitQuaternion& o) const;
    UnitQuaternion operator-() const;
    UnitQuaternion inverse() const;
    UnitQuaternion pow(int e) const;
    Eigen::Matrix3d rotation_matrix() const;

    /// Euclidean distance in R^4.
    double distance(const UnitQuaternion& o) const;
    std::string to_string() const;

private:
    Eigen::Quaterniond q_ = Eigen::Quaterniond::Identity();
};

struct SU2Tuple
{
    std::vector<UnitQuaternion> elements;
    double tol = 1e-9;

    std::size_t size() const { return elements.size(); }
};

/// Symmetric n x n matrix of signs with +1 on the diagonal.
class SignMatrix
{
public:
    explicit SignMatrix(int n = 0);
    static SignMatrix from_type(const TypeMatrix& t);

    int size() const { return n_; }
    int at(int i, int j) const { return s_[static_cast<std::size_t>(i * n_ + j)]; }
    /// Sets entries (i, j) and (j, i).
    void set(int i, int j, int sign);
    bool is_trivial() const;
    /// Z/2 type matrix with 1 for every -1 entry.
    TypeMatrix to_type() const;
    std::string to_string() const;

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

private:
    int n_;
    std::vector<int> s_;
};

/// x y x^-1 y^-1.
UnitQuaternion commutator(const UnitQuaternion& x, const UnitQuaternion& y);
/// Distance from q to the centre {+1, -1}.
double central_defect(const UnitQuaternion& q);
/// Largest central defect over all commutators of the tuple.
double commutator_defect(const SU2Tuple& t);

/// Signs of the commutators. Throws NotAlmostCommuting past t.tol.
SignMatrix commutator_type(const SU2Tuple& t);

/**
 * The psi construction: given a pair with [x_i, x_j] = -1 and signs w for the
 * remaining n - 2 positions (in increasing order), y_k = w_k x_i^{a_k} x_j^{b_k}
 * with b_k from c_ik and a_k from c_jk. Throws BadBasePair when the pair
 * commutes and TypeMismatch when C is not reachable from the pair.
 */
SU2Tuple psi_construct(const UnitQuaternion& xi, const UnitQuaternion& xj, const std::vector<int>& w,
                       const SignMatrix& c, int i, int j, double tol = 1e-9);

/// Sign matrix of any lifts of a commuting tuple of rotations. Throws NotCommutingInSO3.
SignMatrix classify_so3_tuple(const std::vector<UnitQuaternion>& lifts, double tol = 1e-9);
SignMatrix classify_so3_tuple(const std::vector<Eigen::Matrix3d>& rotations, double tol = 1e-9);

/// Uniform (Haar) random element.
UnitQuaternion random_unit(std::mt19937_64& rng);
/// Random anticommuting pair (two orthogonal pure unit quaternions).
std::pair<UnitQuaternion, UnitQuaternion> random_anticommuting_pair(std::mt19937_64& rng);

/// g t_k g^-1 for random t_k in the standard circle and one random g.
SU2Tuple random_torus_tuple(int n, std::uint64_t seed);
SU2Tuple conjugate_tuple(const UnitQuaternion& g, const SU2Tuple& t);

/// A random almost-commuting tuple of type c: a torus tuple for the trivial
/// type, otherwise psi on the first pair (i, j) with c_ij = -1.
SU2Tuple realize_type(const SignMatrix& c, std::mt19937_64& rng, double tol = 1e-9);

struct PsiReport
{
    int n = 0;
    long runs = 0;
    long failures = 0;
    long type_mismatches = 0;
    double max_commutator_defect = 0;
    /// Types for which at least one run failed.
    std::vector<std::string> failed_types;

    nlohmann::json to_json() const;
};

/// runs randomized realizations cycling through every C in T(n, Z/2).
PsiReport verify_psi(int n, long runs, std::uint64_t seed, double tol = 1e-9);

struct So3Report
{
    long runs = 0;
    long failures = 0;

    nlohmann::json to_json() const { return {{"runs", runs}, {"failures", failures}}; }
};

/// Conjugation and lift-sign invariance of classify_so3_tuple on random commuting rotation tuples.
So3Report verify_so3_invariance(int n, long runs, std::uint64_t seed);

} // namespace repspace
