#pragma once

// Finite spanning sets of diagram spaces Con^{p,q}: a bounded generic walker
// for any signature and closed-form normal forms for the preset families.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "icat/diagram.hpp"

namespace icat {

struct DedupStats {
  std::size_t candidates = 0;  // complete wirings visited
  std::size_t duplicates = 0;  // rejected by canonical key
  std::size_t closed_parts = 0;  // rejected for carrying a closed component
};

struct SpanningSet {
  SignaturePtr sig;
  int outputs = 0;
  int inputs = 0;
  int max_boxes = 0;  // box cutoff, or genus cutoff for cobordisms
  std::string method;
  std::vector<Diagram> diagrams;  // canonical, pairwise distinct
  DedupStats stats;
};

/// Thrown when the generic walker would visit more wirings than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCandidateCap = 10'000'000;

/// All diagrams with at most max_boxes boxes and no closed components, up to
/// isomorphism rel boundary, ordered by box count and then canonical key.
SpanningSet enumerate_generic(const SignaturePtr& sig, int p, int q, int max_boxes,
                              std::size_t candidate_cap = kDefaultCandidateCap);

/// The p! permutation diagrams, in lexicographic order of the images.
SpanningSet enumerate_permutations(const SignaturePtr& sig, int p);

/// Perfect matchings of the p + q boundary points; requires generators
/// c:(0,2) and d:(2,0). Empty when p + q is odd.
SpanningSet enumerate_brauer(const SignaturePtr& sig, int p, int q);

/// One tree diagram per set partition of the p + q boundary points; requires
/// m:(1,2), u:(1,0), c:(2,0).
SpanningSet enumerate_partition(const SignaturePtr& sig, int p, int q);

/// One cobordism per set partition of the boundary points with a genus label
/// at most genus_cutoff on every block; requires m, u, eps:(0,1), c. For
/// (0, 0) returns the closed connected surfaces of genus 0..genus_cutoff.
SpanningSet enumerate_cobordism(const SignaturePtr& sig, int p, int q, int genus_cutoff);

/// Dispatch by name: generic, permutation, brauer, partition, cobordism.
SpanningSet enumerate_by_name(const std::string& method, const SignaturePtr& sig, int p, int q, int cutoff);

/// The handle operator x = m o (m (x) id) o (id (x) c) on one strand.
Diagram handle_diagram(const SignaturePtr& sig);

/// Genus of a closed connected diagram over a Frobenius signature.
int closed_genus(const Diagram& connected);

}  // namespace icat
