#include "repspace/smith.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "repspace/errors.hpp"

namespace repspace
{

namespace
{

// Row-major dense working storage for the reduction kernels.
template <typename Scalar>
struct Grid
{
    Index rows = 0;
    Index cols = 0;
    std::vector<Scalar> data;

    Grid() = default;
    Grid(Index r, Index c) : rows(r), cols(c), data(static_cast<std::size_t>(r * c), Scalar(0)) {}

    Scalar& operator()(Index r, Index c) { return data[static_cast<std::size_t>(r * cols + c)]; }
    const Scalar& operator()(Index r, Index c) const { return data[static_cast<std::size_t>(r * cols + c)]; }

    static Grid identity(Index n)
    {
        Grid g(n, n);
        for (Index i = 0; i < n; ++i)
            g(i, i) = Scalar(1);
        return g;
    }

    void swap_rows(Index a, Index b)
    {
        if (a != b)
            for (Index c = 0; c < cols; ++c)
                std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(Index a, Index b)
    {
        if (a != b)
            for (Index r = 0; r < rows; ++r)
                std::swap((*this)(r, a), (*this)(r, b));
    }
    // row_dst -= q * row_src
    void row_axpy(Index dst, const Scalar& q, Index src)
    {
        for (Index c = 0; c < cols; ++c)
            if ((*this)(src, c) != 0)
                (*this)(dst, c) -= q * (*this)(src, c);
    }
    void col_axpy(Index dst, const Scalar& q, Index src)
    {
        for (Index r = 0; r < rows; ++r)
            if ((*this)(r, src) != 0)
                (*this)(r, dst) -= q * (*this)(r, src);
    }
    void negate_row(Index r)
    {
        for (Index c = 0; c < cols; ++c)
            (*this)(r, c) = -(*this)(r, c);
    }
};

template <typename Scalar>
Scalar magnitude(const Scalar& a)
{
    return a < 0 ? -a : a;
}

/**
 * In-place Smith reduction. Row operations are mirrored on *u (rows) and
 * column operations on *v (columns) when given. Returns the diagonal.
 */
template <typename Scalar>
std::vector<Scalar> smith_reduce(Grid<Scalar>& a, Grid<Scalar>* u, Grid<Scalar>* v)
{
    std::vector<Scalar> diagonal;
    const Index steps = std::min(a.rows, a.cols);
    for (Index t = 0; t < steps; ++t)
    {
        for (;;)
        {
            Index pr = -1, pc = -1;
            Scalar best(0);
            for (Index r = t; r < a.rows; ++r)
                for (Index c = t; c < a.cols; ++c)
                {
                    const Scalar& x = a(r, c);
                    if (x == 0)
                        continue;
                    Scalar m = magnitude(x);
                    if (pr < 0 || m < best)
                    {
                        best = m;
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0)
                return diagonal;

            a.swap_rows(t, pr);
            if (u)
                u->swap_rows(t, pr);
            a.swap_cols(t, pc);
            if (v)
                v->swap_cols(t, pc);

            bool clean = true;
            const Scalar pivot = a(t, t);
            for (Index r = t + 1; r < a.rows; ++r)
            {
                if (a(r, t) == 0)
                    continue;
                Scalar q = a(r, t) / pivot;
                a.row_axpy(r, q, t);
                if (u)
                    u->row_axpy(r, q, t);
                if (a(r, t) != 0)
                    clean = false;
            }
            for (Index c = t + 1; c < a.cols; ++c)
            {
                if (a(t, c) == 0)
                    continue;
                Scalar q = a(t, c) / pivot;
                a.col_axpy(c, q, t);
                if (v)
                    v->col_axpy(c, q, t);
                if (a(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility: fold an offending row into the pivot row so the
            // next pass produces a smaller remainder.
            Index offending = -1;
            for (Index r = t + 1; r < a.rows && offending < 0; ++r)
                for (Index c = t + 1; c < a.cols; ++c)
                    if (a(r, c) % pivot != 0)
                    {
                        offending = r;
                        break;
                    }
            if (offending < 0)
                break;
            a.row_axpy(t, Scalar(-1), offending);
            if (u)
                u->row_axpy(t, Scalar(-1), offending);
        }
        if (a(t, t) < 0)
        {
            a.negate_row(t);
            if (u)
                u->negate_row(t);
        }
        diagonal.push_back(a(t, t));
    }
    return diagonal;
}

template <typename Scalar>
Grid<Scalar> to_grid(const IntMatrix& m)
{
    Grid<Scalar> g(m.rows(), m.cols());
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            g(r, c) = Scalar(m(r, c));
    return g;
}

IntMatrix to_matrix(const Grid<Integer>& g)
{
    IntMatrix m(g.rows, g.cols);
    for (Index r = 0; r < g.rows; ++r)
        for (Index c = 0; c < g.cols; ++c)
            m(r, c) = g(r, c);
    return m;
}

// Dense diagonal on checked int64, retried on Integer after an overflow.
template <typename Fill>
std::vector<Integer> dense_divisors(Index rows, Index cols, Fill&& fill)
{
    try
    {
        Grid<CheckedInt64> g(rows, cols);
        fill(g);
        auto d = smith_reduce<CheckedInt64>(g, nullptr, nullptr);
        std::vector<Integer> out;
        for (auto x : d)
            out.push_back(to_integer(x));
        return out;
    }
    catch (const OverflowError&)
    {
        Grid<Integer> g(rows, cols);
        fill(g);
        return smith_reduce<Integer>(g, nullptr, nullptr);
    }
}

// ---------------------------------------------------------------------------
// Sparse unit-pivot elimination.

template <typename T>
struct IntegerRing
{
    using value_type = T;
    static value_type from(const Integer& v) { return value_type(v); }
    bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
    // a / pivot for a unit pivot
    value_type factor(const value_type& a, const value_type& pivot) const { return a * pivot; }
    value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) const
    {
        return a - f * b;
    }
};

struct PrimeField
{
    using value_type = std::uint64_t;
    std::uint64_t p;

    value_type from(const Integer& v) const
    {
        Integer r = v % Integer(p);
        if (r < 0)
            r += p;
        return r.convert_to<std::uint64_t>();
    }
    bool is_unit(value_type a) const { return a != 0; }
    value_type inverse(value_type a) const
    {
        value_type result = 1, base = a, e = p - 2;
        while (e)
        {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }
    value_type factor(value_type a, value_type pivot) const { return a * inverse(pivot) % p; }
    value_type sub_mul(value_type a, value_type f, value_type b) const
    {
        return (a + p - f * b % p) % p;
    }
};

template <typename Ring>
class UnitEliminator
{
public:
    using value_type = typename Ring::value_type;
    struct Entry
    {
        Index pos;
        value_type value;
    };
    using Line = std::vector<Entry>;

    UnitEliminator(const SparseIntMatrix& m, Ring ring) : ring_(ring)
    {
        // Lines are the matrix columns; positions are row indices.
        lines_.resize(static_cast<std::size_t>(m.cols()));
        pos_count_.assign(static_cast<std::size_t>(m.rows()), 0);
        pos_lines_.resize(static_cast<std::size_t>(m.rows()));
        for (Index c = 0; c < m.cols(); ++c)
        {
            auto& line = lines_[static_cast<std::size_t>(c)];
            for (const auto& [r, v] : m.column(c))
            {
                value_type x = ring_.from(v);
                if (x == value_type(0))
                    continue;
                line.push_back({r, x});
                ++pos_count_[static_cast<std::size_t>(r)];
                pos_lines_[static_cast<std::size_t>(r)].push_back(c);
            }
        }
    }

    /// Eliminates all unit pivots; returns how many were taken.
    Index run()
    {
        using Item = std::pair<std::size_t, Index>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        for (Index l = 0; l < static_cast<Index>(lines_.size()); ++l)
            if (!lines_[static_cast<std::size_t>(l)].empty())
                heap.emplace(lines_[static_cast<std::size_t>(l)].size(), l);

        Index pivots = 0;
        Line merged;
        while (!heap.empty())
        {
            auto [len, l] = heap.top();
            heap.pop();
            auto& line = lines_[static_cast<std::size_t>(l)];
            if (line.size() != len || len == 0)
                continue;

            // Unit entry whose position is shared by the fewest lines.
            std::size_t best = line.size();
            for (std::size_t e = 0; e < line.size(); ++e)
                if (ring_.is_unit(line[e].value) &&
                    (best == line.size() ||
                     pos_count_[static_cast<std::size_t>(line[e].pos)] <
                         pos_count_[static_cast<std::size_t>(line[best].pos)]))
                    best = e;
            if (best == line.size())
                continue;

            const Index pivot_pos = line[best].pos;
            const value_type pivot = line[best].value;
            auto& users = pos_lines_[static_cast<std::size_t>(pivot_pos)];
            std::sort(users.begin(), users.end());
            users.erase(std::unique(users.begin(), users.end()), users.end());
            for (Index other : users)
            {
                if (other == l)
                    continue;
                auto& target = lines_[static_cast<std::size_t>(other)];
                auto it = std::lower_bound(target.begin(), target.end(), pivot_pos,
                                           [](const Entry& e, Index p) { return e.pos < p; });
                if (it == target.end() || it->pos != pivot_pos)
                    continue;
                const value_type f = ring_.factor(it->value, pivot);
                eliminate(target, line, f, other, merged);
                if (!target.empty())
                    heap.emplace(target.size(), other);
            }
            users.clear();
            for (const auto& e : line)
                --pos_count_[static_cast<std::size_t>(e.pos)];
            line.clear();
            ++pivots;
        }
        return pivots;
    }

    /// Lines that still have entries (none of them unit-pivotable).
    std::vector<const Line*> remainder() const
    {
        std::vector<const Line*> out;
        for (const auto& line : lines_)
            if (!line.empty())
                out.push_back(&line);
        return out;
    }

private:
    // target -= f * source, dropping the pivot position, bookkeeping counts.
    void eliminate(Line& target, const Line& source, const value_type& f, Index target_id, Line& merged)
    {
        merged.clear();
        merged.reserve(target.size() + source.size());
        auto a = target.begin();
        auto b = source.begin();
        while (a != target.end() || b != source.end())
        {
            if (b == source.end() || (a != target.end() && a->pos < b->pos))
            {
                merged.push_back(std::move(*a));
                ++a;
            }
            else if (a == target.end() || b->pos < a->pos)
            {
                value_type v = ring_.sub_mul(value_type(0), f, b->value);
                merged.push_back({b->pos, std::move(v)});
                ++pos_count_[static_cast<std::size_t>(b->pos)];
                pos_lines_[static_cast<std::size_t>(b->pos)].push_back(target_id);
                ++b;
            }
            else
            {
                value_type v = ring_.sub_mul(a->value, f, b->value);
                if (v == value_type(0))
                    --pos_count_[static_cast<std::size_t>(a->pos)];
                else
                    merged.push_back({a->pos, std::move(v)});
                ++a;
                ++b;
            }
        }
        target.swap(merged);
    }

    Ring ring_;
    std::vector<Line> lines_;
    std::vector<int> pos_count_;
    std::vector<std::vector<Index>> pos_lines_;
};

template <typename T>
MatrixInvariants integer_invariants(const SparseIntMatrix& m)
{
    UnitEliminator<IntegerRing<T>> elim(m, IntegerRing<T>{});
    MatrixInvariants out;
    out.rank = elim.run();

    auto rest = elim.remainder();
    if (rest.empty())
        return out;
    std::vector<Index> positions;
    for (const auto* line : rest)
        for (const auto& e : *line)
            positions.push_back(e.pos);
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

    const Index rows = static_cast<Index>(rest.size());
    const Index cols = static_cast<Index>(positions.size());
    auto divisors = dense_divisors(rows, cols, [&](auto& g) {
        using S = std::decay_t<decltype(g(0, 0))>;
        for (Index r = 0; r < rows; ++r)
            for (const auto& e : *rest[static_cast<std::size_t>(r)])
            {
                Index c = std::lower_bound(positions.begin(), positions.end(), e.pos) - positions.begin();
                g(r, c) = S(to_integer(e.value));
            }
    });
    for (auto& d : divisors)
    {
        ++out.rank;
        if (d != 1)
            out.torsion.push_back(std::move(d));
    }
    return out;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    Grid<Integer> a = to_grid<Integer>(m);
    Grid<Integer> u = Grid<Integer>::identity(m.rows());
    Grid<Integer> v = Grid<Integer>::identity(m.cols());
    smith_reduce<Integer>(a, &u, &v);
    return {to_matrix(u), to_matrix(a), to_matrix(v)};
}

std::vector<Integer> elementary_divisors(const IntMatrix& m)
{
    return dense_divisors(m.rows(), m.cols(), [&](auto& g) {
        using S = std::decay_t<decltype(g(0, 0))>;
        for (Index r = 0; r < m.rows(); ++r)
            for (Index c = 0; c < m.cols(); ++c)
                g(r, c) = S(m(r, c));
    });
}

MatrixInvariants matrix_invariants(const SparseIntMatrix& m)
{
    try
    {
        return integer_invariants<CheckedInt64>(m);
    }
    catch (const OverflowError&)
    {
        return integer_invariants<Integer>(m);
    }
}

bool is_prime(unsigned p)
{
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Index rank_mod_p(const SparseIntMatrix& m, unsigned p)
{
    if (!is_prime(p))
        throw NotPrime(std::to_string(p) + " is not prime");
    UnitEliminator<PrimeField> elim(m, PrimeField{p});
    return elim.run();
}

AbelianGroup cokernel(const SparseIntMatrix& m)
{
    auto inv = matrix_invariants(m);
    return AbelianGroup(static_cast<std::size_t>(m.rows() - inv.rank), inv.torsion);
}

AbelianGroup cokernel(const IntMatrix& m)
{
    auto d = elementary_divisors(m);
    return AbelianGroup(static_cast<std::size_t>(m.rows()) - d.size(), d);
}

AbelianGroup homology_of_pair(const SparseIntMatrix& d_k, const SparseIntMatrix& d_k1)
{
    if (d_k.cols() != d_k1.rows())
        throw DimensionMismatch("d_k has " + std::to_string(d_k.cols()) + " columns but d_{k+1} has " +
                                std::to_string(d_k1.rows()) + " rows");
    if (!(d_k * d_k1).is_zero())
        throw CompositionNotZero("d_k * d_{k+1} has nonzero entries");
    const Index rank_k = matrix_invariants(d_k).rank;
    auto inv = matrix_invariants(d_k1);
    return AbelianGroup(static_cast<std::size_t>(d_k.cols() - rank_k - inv.rank), inv.torsion);
}

AbelianGroup homology_of_pair(const IntMatrix& d_k, const IntMatrix& d_k1)
{
    return homology_of_pair(SparseIntMatrix::from_dense(d_k), SparseIntMatrix::from_dense(d_k1));
}

} // namespace repspace
