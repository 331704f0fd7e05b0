#pragma once

#include "repspace/simplicial_set.hpp"

namespace fixture
{

using repspace::FormalSimplex;
using repspace::SimplicialAction;
using repspace::SimplicialSet;

inline SimplicialSet point()
{
    SimplicialSet x;
    x.add_simplex(0, "p");
    x.set_basepoint(0);
    return x;
}

inline SimplicialSet sphere0()
{
    SimplicialSet x;
    x.add_simplex(0, "a");
    x.add_simplex(0, "b");
    x.set_basepoint(0);
    return x;
}

// Two vertices (1 and -1), two edges (upper and lower half circles).
inline SimplicialSet circle()
{
    SimplicialSet x;
    x.add_simplex(0, "+1");
    x.add_simplex(0, "-1");
    for (const char* e : {"upper", "lower"})
        x.add_simplex(1, e, {FormalSimplex::nondegenerate(0, 1), FormalSimplex::nondegenerate(0, 0)});
    x.set_basepoint(0);
    return x;
}

// Complex conjugation on the 2-gon circle: fixes both vertices, swaps the edges.
inline SimplicialAction conjugation(const SimplicialSet& c)
{
    SimplicialAction a = SimplicialAction::trivial(c, repspace::FiniteGroup::cyclic(2));
    a.perm[1][1] = {1, 0};
    return a;
}

inline SimplicialSet minimal_circle()
{
    SimplicialSet x;
    x.add_simplex(0, "v");
    x.add_simplex(1, "e", {FormalSimplex::nondegenerate(0, 0), FormalSimplex::nondegenerate(0, 0)});
    x.set_basepoint(0);
    return x;
}

inline SimplicialSet sphere2()
{
    SimplicialSet x;
    x.add_simplex(0, "v");
    const auto sv = FormalSimplex::degenerate_vertex(1, 0);
    x.add_simplex(2, "s", {sv, sv, sv});
    x.set_basepoint(0);
    return x;
}

inline SimplicialSet rp2()
{
    SimplicialSet x;
    x.add_simplex(0, "v");
    x.add_simplex(1, "a", {FormalSimplex::nondegenerate(0, 0), FormalSimplex::nondegenerate(0, 0)});
    x.add_simplex(2, "f", {FormalSimplex::nondegenerate(1, 0), FormalSimplex::degenerate_vertex(1, 0),
                           FormalSimplex::nondegenerate(1, 0)});
    x.set_basepoint(0);
    return x;
}

inline SimplicialSet torus()
{
    auto c = circle();
    return repspace::product(c, c);
}

} // namespace fixture
