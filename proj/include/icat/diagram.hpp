#pragma once

// String diagrams over a signature, modelled as perfect matchings between
// sources (box outputs and open inputs) and sinks (box inputs and open
// outputs). A diagram with `outputs` p and `inputs` q is an element of
// Con^{p,q}, i.e. a morphism W^{(x)q} -> W^{(x)p}.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icat/signature.hpp"

namespace icat {

inline constexpr int kBoundary = -1;

/// A wire start: output `index` of box `box`, or open input `index` when
/// box == kBoundary.
struct Source {
  int box = kBoundary;
  int index = 0;

  static Source boundary(int j) { return {kBoundary, j}; }
  static Source box_output(int b, int k) { return {b, k}; }
  bool is_boundary() const { return box == kBoundary; }
  friend bool operator==(const Source&, const Source&) = default;
};

/// A wire end: input `index` of box `box`, or open output `index` when
/// box == kBoundary.
struct Sink {
  int box = kBoundary;
  int index = 0;

  static Sink boundary(int i) { return {kBoundary, i}; }
  static Sink box_input(int b, int j) { return {b, j}; }
  bool is_boundary() const { return box == kBoundary; }
  friend bool operator==(const Sink&, const Sink&) = default;
};

class Diagram {
 public:
  /// `wiring[s]` is the sink id fed by source id s. Source ids enumerate the
  /// open inputs first, then each box's outputs in box order; sink ids
  /// enumerate the open outputs first, then each box's inputs. Throws
  /// std::invalid_argument unless the wiring is a bijection.
  Diagram(SignaturePtr sig, int outputs, int inputs, std::vector<std::size_t> boxes, std::vector<int> wiring,
          int loops = 0);

  static Diagram identity(SignaturePtr sig, int n);
  /// Box-free diagram wiring open input i to open output sigma[i].
  static Diagram permutation(SignaturePtr sig, std::span<const int> sigma);
  /// A single box whose legs are exposed in order.
  static Diagram generator(SignaturePtr sig, std::string_view name);
  static Diagram empty(SignaturePtr sig) { return identity(std::move(sig), 0); }
  /// The dimension invariant D: one box-free closed loop.
  static Diagram loop(SignaturePtr sig, int count = 1);

  const Signature& signature() const { return *sig_; }
  const SignaturePtr& signature_ptr() const { return sig_; }
  int outputs() const { return outputs_; }
  int inputs() const { return inputs_; }
  bool is_closed() const { return outputs_ == 0 && inputs_ == 0; }
  std::size_t num_boxes() const { return boxes_.size(); }
  const std::vector<std::size_t>& boxes() const { return boxes_; }
  const Generator& box_generator(int b) const { return sig_->at(boxes_.at(static_cast<std::size_t>(b))); }
  int loops() const { return loops_; }

  int num_sources() const { return static_cast<int>(wiring_.size()); }
  /// Wires including box-free loops.
  int num_wires() const { return num_sources() + loops_; }

  int source_id(Source s) const;
  int sink_id(Sink t) const;
  Source source(int id) const;
  Sink sink(int id) const;
  int sink_of(int source_id) const { return wiring_[static_cast<std::size_t>(source_id)]; }
  int source_of(int sink_id) const { return inverse_[static_cast<std::size_t>(sink_id)]; }
  Sink target(Source s) const { return sink(sink_of(source_id(s))); }
  Source origin(Sink t) const { return source(source_of(sink_id(t))); }
  const std::vector<int>& wiring() const { return wiring_; }

  /// Number of boxes carrying the named generator.
  int count(std::string_view name) const;

  /// Equality up to wiring isomorphism rel boundary (canonical keys agree).
  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  SignaturePtr sig_;
  int outputs_ = 0;
  int inputs_ = 0;
  std::vector<std::size_t> boxes_;
  std::vector<int> wiring_;
  std::vector<int> inverse_;
  std::vector<int> source_offset_;
  std::vector<int> sink_offset_;
  int loops_ = 0;
};

/// Incremental construction by naming ports.
class DiagramBuilder {
 public:
  DiagramBuilder(SignaturePtr sig, int outputs, int inputs);

  int add_box(std::string_view name);
  int add_box(std::size_t generator);
  void connect(Source from, Sink to);
  void add_loops(int n) { loops_ += n; }
  /// Throws std::invalid_argument if some port is unwired or wired twice.
  Diagram build() const;

 private:
  SignaturePtr sig_;
  int outputs_;
  int inputs_;
  std::vector<std::size_t> boxes_;
  std::vector<std::pair<Source, Sink>> wires_;
  int loops_ = 0;
};

/// g o f: glues the open outputs of f to the open inputs of g in order.
/// Throws std::invalid_argument on arity or signature mismatch.
Diagram compose(const Diagram& g, const Diagram& f);
Diagram tensor(const Diagram& f, const Diagram& g);
/// Wires open output i to open input i; requires a square diagram.
Diagram trace_close(const Diagram& f);
/// Connected components of a closed diagram; box-free loops come last, one each.
std::vector<Diagram> connected_components(const Diagram& closed);
/// The (p, p) diagram composed n times with itself; n = 0 gives the identity.
Diagram power(const Diagram& f, int n);

/// Canonical representative: boxes renumbered by a deterministic traversal
/// from the pinned boundary, closed components ordered by their minimal
/// encodings. `key` identifies the isomorphism class rel boundary.
struct CanonicalForm {
  Diagram diagram;
  std::string key;
};
CanonicalForm canonicalize(const Diagram& d);
std::string canonical_key(const Diagram& d);

/// Key of the isomorphism class of a closed connected diagram; throws if the
/// argument is open or disconnected.
std::string closed_diagram_key(const Diagram& connected);

}  // namespace icat
