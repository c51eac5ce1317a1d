#pragma once

#include "resurgence/graph.hpp"
#include "resurgence/monomial_ideal.hpp"

namespace resurgence {

/// I(G): generated by xy over the edges.  Rejects isolated vertices.
MonomialIdeal edge_ideal(const Graph& g);

/// J(G): generated by the products over minimal vertex covers; the Alexander
/// dual of the edge ideal.  Rejects isolated vertices.
MonomialIdeal cover_ideal(const Graph& g);

/// J(H) for a hypergraph: products over minimal vertex covers.
MonomialIdeal cover_ideal(const Hypergraph& h);

/// The hypergraph whose cover ideal is I: edges are the minimal primes.
/// Rejects ideals with a height-one minimal prime.
Hypergraph hypergraph_of_ideal(const MonomialIdeal& I);

}  // namespace resurgence
