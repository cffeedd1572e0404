#pragma once

// Shared fixtures for the unit tests: small signatures and a seeded random
// diagram generator.

#include <algorithm>
#include <numeric>
#include <random>

#include "icat/diagram.hpp"

namespace icat::testing {

inline SignaturePtr empty_sig() { return make_signature({}); }

inline SignaturePtr orth_sig() { return make_signature({{"c", 0, 2}, {"d", 2, 0}}); }

inline SignaturePtr frob_sig() { return make_signature({{"m", 1, 2}, {"u", 1, 0}, {"eps", 0, 1}, {"c", 2, 0}}); }

/// Every arity shape at once, for property tests.
inline SignaturePtr mixed_sig() {
  return make_signature({{"m", 1, 2}, {"u", 1, 0}, {"eps", 0, 1}, {"c", 2, 0}, {"d", 0, 2}, {"T", 1, 1}});
}

/// Random diagram with the given number of open inputs and open outputs
/// chosen to balance the boxes; retries until the outputs are nonnegative.
inline Diagram random_with_inputs(const SignaturePtr& sig, int inputs, int max_boxes, std::mt19937& rng) {
  std::uniform_int_distribution<int> nbox(0, max_boxes);
  std::uniform_int_distribution<std::size_t> gen(0, sig->size() - 1);
  for (;;) {
    const int n = nbox(rng);
    std::vector<std::size_t> boxes;
    int outs = 0;
    int ins = 0;
    for (int i = 0; i < n; ++i) {
      boxes.push_back(gen(rng));
      outs += sig->at(boxes.back()).outputs;
      ins += sig->at(boxes.back()).inputs;
    }
    const int outputs = inputs + outs - ins;
    if (outputs < 0 || outputs > 4) continue;
    std::vector<int> wiring(static_cast<std::size_t>(inputs + outs));
    std::iota(wiring.begin(), wiring.end(), 0);
    std::shuffle(wiring.begin(), wiring.end(), rng);
    return Diagram(sig, outputs, inputs, std::move(boxes), std::move(wiring));
  }
}

/// Random diagram with a fixed number of open outputs.
inline Diagram random_with_outputs(const SignaturePtr& sig, int outputs, int max_boxes, std::mt19937& rng) {
  std::uniform_int_distribution<int> nbox(0, max_boxes);
  std::uniform_int_distribution<std::size_t> gen(0, sig->size() - 1);
  for (;;) {
    const int n = nbox(rng);
    std::vector<std::size_t> boxes;
    int outs = 0;
    int ins = 0;
    for (int i = 0; i < n; ++i) {
      boxes.push_back(gen(rng));
      outs += sig->at(boxes.back()).outputs;
      ins += sig->at(boxes.back()).inputs;
    }
    const int inputs = outputs + ins - outs;
    if (inputs < 0 || inputs > 4) continue;
    std::vector<int> wiring(static_cast<std::size_t>(inputs + outs));
    std::iota(wiring.begin(), wiring.end(), 0);
    std::shuffle(wiring.begin(), wiring.end(), rng);
    return Diagram(sig, outputs, inputs, std::move(boxes), std::move(wiring));
  }
}

/// Random square diagram (p, p).
inline Diagram random_square(const SignaturePtr& sig, int p, int max_boxes, std::mt19937& rng) {
  for (;;) {
    Diagram d = random_with_inputs(sig, p, max_boxes, rng);
    if (d.outputs() == p) return d;
  }
}

/// Random closed diagram.
inline Diagram random_closed(const SignaturePtr& sig, int max_boxes, std::mt19937& rng) {
  return random_square(sig, 0, max_boxes, rng);
}

/// Cycle count of a permutation given as images.
inline int cycle_count(const std::vector<int>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) seen[j] = true;
  }
  return cycles;
}

}  // namespace icat::testing
