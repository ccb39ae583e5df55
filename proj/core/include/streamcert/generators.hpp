#pragma once

#include <cstdint>
#include <span>

#include "streamcert/digraph.hpp"

namespace streamcert::gen {

Digraph random_digraph(int n, double p, std::uint64_t seed);
Digraph random_dag(int n, double p, std::uint64_t seed);
Digraph random_tournament(int n, std::uint64_t seed);
Digraph transitive_tournament(int n);
Digraph complete_digraph(int n);
Digraph directed_cycle(int n);
Digraph bidirected_cycle(int n);
Digraph circulant(int n, std::span<const int> offsets);
Digraph grid(int rows, int cols);
// Hamiltonian cycle plus independent random arcs; strongly connected.
Digraph random_strong(int n, double p, std::uint64_t seed);
// Circulant on offsets 1..k plus random arcs, randomly relabelled.
Digraph random_arc_strong(int n, int k, double p, std::uint64_t seed);
Digraph relabel(const Digraph& g, std::span<const Node> perm);
Digraph random_relabel(const Digraph& g, std::uint64_t seed);

}  // namespace streamcert::gen
