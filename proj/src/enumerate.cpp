#include "icat/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace icat {

namespace {

void require_generator(const Signature& sig, const std::string& name, int outputs, int inputs, const char* method) {
  const auto g = sig.find(name);
  if (!g || sig.at(*g).outputs != outputs || sig.at(*g).inputs != inputs)
    throw std::invalid_argument(std::string(method) + " enumeration needs generator " + name + ":(" +
                                std::to_string(outputs) + "," + std::to_string(inputs) + ")");
}

/// Collects canonical forms, dropping duplicates.
class Collector {
 public:
  explicit Collector(DedupStats& stats) : stats_(stats) {}

  void add(const Diagram& d) {
    CanonicalForm cf = canonicalize(d);
    if (!seen_.emplace(cf.key, 0).second) {
      ++stats_.duplicates;
      return;
    }
    out_.push_back(std::move(cf));
  }
  /// Insertion order.
  std::vector<Diagram> ordered() && {
    std::vector<Diagram> ds;
    ds.reserve(out_.size());
    for (auto& cf : out_) ds.push_back(std::move(cf.diagram));
    return ds;
  }
  /// Sorted by box count, then key.
  std::vector<Diagram> sorted() && {
    std::stable_sort(out_.begin(), out_.end(), [](const CanonicalForm& a, const CanonicalForm& b) {
      if (a.diagram.num_boxes() != b.diagram.num_boxes()) return a.diagram.num_boxes() < b.diagram.num_boxes();
      return a.key < b.key;
    });
    return std::move(*this).ordered();
  }

 private:
  DedupStats& stats_;
  std::map<std::string, int> seen_;
  std::vector<CanonicalForm> out_;
};

bool has_closed_component(const Diagram& d) {
  const int n = static_cast<int>(d.num_boxes());
  if (n == 0) return false;
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::vector<int> queue;
  auto visit = [&](int b) {
    if (b >= 0 && !reached[static_cast<std::size_t>(b)]) {
      reached[static_cast<std::size_t>(b)] = true;
      queue.push_back(b);
    }
  };
  for (int i = 0; i < d.outputs(); ++i) visit(d.origin(Sink::boundary(i)).box);
  for (int j = 0; j < d.inputs(); ++j) visit(d.target(Source::boundary(j)).box);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int b = queue[k];
    for (int o = 0; o < d.box_generator(b).outputs; ++o) visit(d.target(Source::box_output(b, o)).box);
    for (int i = 0; i < d.box_generator(b).inputs; ++i) visit(d.origin(Sink::box_input(b, i)).box);
  }
  return static_cast<int>(queue.size()) < n;
}

/// Depth-first walk over perfect matchings for one box multiset. Among
/// untouched boxes of one generator only the lowest index is tried, which
/// keeps at least one representative of every isomorphism class.
class MatchingWalker {
 public:
  MatchingWalker(const SignaturePtr& sig, int p, int q, std::vector<std::size_t> boxes, std::size_t& budget_used,
                 std::size_t cap, Collector& out, DedupStats& stats)
      : sig_(sig), p_(p), q_(q), boxes_(std::move(boxes)), used_(budget_used), cap_(cap), out_(out), stats_(stats) {
    int nsrc = q_;
    int nsnk = p_;
    for (std::size_t b = 0; b < boxes_.size(); ++b) {
      const Generator& g = sig_->at(boxes_[b]);
      for (int k = 0; k < g.outputs; ++k) src_box_.push_back(static_cast<int>(b));
      for (int j = 0; j < g.inputs; ++j) snk_box_.push_back(static_cast<int>(b));
      nsrc += g.outputs;
      nsnk += g.inputs;
    }
    src_box_.insert(src_box_.begin(), static_cast<std::size_t>(q_), kBoundary);
    snk_box_.insert(snk_box_.begin(), static_cast<std::size_t>(p_), kBoundary);
    n_ = nsrc;
    wiring_.assign(static_cast<std::size_t>(n_), -1);
    sink_used_.assign(static_cast<std::size_t>(n_), false);
    touch_.assign(boxes_.size(), 0);
  }

  void run() { step(0); }

 private:
  bool may_enter(int b) const {
    if (touch_[static_cast<std::size_t>(b)] > 0) return true;
    for (int o = b - 1; o >= 0 && boxes_[static_cast<std::size_t>(o)] == boxes_[static_cast<std::size_t>(b)]; --o) {
      if (touch_[static_cast<std::size_t>(o)] == 0) return false;
    }
    return true;
  }

  void step(int s) {
    if (s == n_) {
      if (++used_ > cap_)
        throw BudgetExceeded("generic enumeration exceeded the candidate cap of " + std::to_string(cap_) +
                             " wirings; lower max_boxes or raise the cap");
      ++stats_.candidates;
      Diagram d(sig_, p_, q_, boxes_, wiring_);
      if (has_closed_component(d)) {
        ++stats_.closed_parts;
        return;
      }
      out_.add(d);
      return;
    }
    const int sb = src_box_[static_cast<std::size_t>(s)];
    // A box counts as touched from the moment its first output is processed.
    const bool first_output = sb >= 0 && (s == 0 || src_box_[static_cast<std::size_t>(s - 1)] != sb);
    if (first_output) {
      if (!may_enter(sb)) return;
      ++touch_[static_cast<std::size_t>(sb)];
    }
    for (int t = 0; t < n_; ++t) {
      if (sink_used_[static_cast<std::size_t>(t)]) continue;
      const int tb = snk_box_[static_cast<std::size_t>(t)];
      if (tb >= 0 && !may_enter(tb)) continue;
      sink_used_[static_cast<std::size_t>(t)] = true;
      wiring_[static_cast<std::size_t>(s)] = t;
      if (tb >= 0) ++touch_[static_cast<std::size_t>(tb)];
      step(s + 1);
      if (tb >= 0) --touch_[static_cast<std::size_t>(tb)];
      sink_used_[static_cast<std::size_t>(t)] = false;
    }
    wiring_[static_cast<std::size_t>(s)] = -1;
    if (first_output) --touch_[static_cast<std::size_t>(sb)];
  }

  SignaturePtr sig_;
  int p_;
  int q_;
  std::vector<std::size_t> boxes_;
  std::size_t& used_;
  std::size_t cap_;
  Collector& out_;
  DedupStats& stats_;
  int n_ = 0;
  std::vector<int> src_box_;
  std::vector<int> snk_box_;
  std::vector<int> wiring_;
  std::vector<bool> sink_used_;
  std::vector<int> touch_;
};

/// Strand-level construction helper shared by the tree enumerators.
class TreeBuilder {
 public:
  TreeBuilder(const SignaturePtr& sig, int p, int q) : b_(sig, p, q) {}

  Source box(const std::string& name, std::vector<Source> ins, int out_index = 0) {
    const int id = b_.add_box(name);
    for (std::size_t j = 0; j < ins.size(); ++j) b_.connect(ins[j], Sink::box_input(id, static_cast<int>(j)));
    return Source::box_output(id, out_index);
  }
  /// Two strands from a copairing box.
  std::pair<Source, Source> copair() {
    const int id = b_.add_box("c");
    return {Source::box_output(id, 0), Source::box_output(id, 1)};
  }
  /// Delta(x) = (m (x) id)(x (x) c).
  std::pair<Source, Source> split(Source x) {
    auto [c0, c1] = copair();
    return {box("m", {x, c0}), c1};
  }
  Source merge(const std::vector<Source>& ins) {
    Source x = ins.front();
    for (std::size_t k = 1; k < ins.size(); ++k) x = box("m", {x, ins[k]});
    return x;
  }
  /// Splits one strand into n >= 1 strands by repeated Delta on the last one.
  std::vector<Source> fan(Source x, int n) {
    std::vector<Source> out{x};
    while (static_cast<int>(out.size()) < n) {
      auto [a, b] = split(out.back());
      out.back() = a;
      out.push_back(b);
    }
    return out;
  }
  Source handles(Source x, int g) {
    for (int k = 0; k < g; ++k) {
      auto [a, b] = split(x);
      x = box("m", {a, b});
    }
    return x;
  }
  /// Consumes a strand with an m box whose output feeds its own second input.
  void absorb_into_self_loop(Source x) {
    const int id = b_.add_box("m");
    b_.connect(x, Sink::box_input(id, 0));
    b_.connect(Source::box_output(id, 0), Sink::box_input(id, 1));
  }
  void absorb_counit(Source x) { box("eps", {x}); }
  void to_output(Source x, int i) { b_.connect(x, Sink::boundary(i)); }
  Diagram build() const { return b_.build(); }

 private:
  DiagramBuilder b_;
};

/// Boundary points numbered out0, in0, out1, in1, ... so the first
/// matching or partition in each order is the identity-like one where
/// possible. Returns (is_output, index) for point k.
std::vector<std::pair<bool, int>> interleaved_points(int p, int q) {
  std::vector<std::pair<bool, int>> pts;
  for (int k = 0; k < std::max(p, q); ++k) {
    if (k < p) pts.emplace_back(true, k);
    if (k < q) pts.emplace_back(false, k);
  }
  return pts;
}

/// Set partitions of n points as restricted growth strings, lexicographic.
std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto& self, int i, int max_block) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(max_block, b));
    }
  };
  if (n == 0) return {{}};
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

struct Block {
  std::vector<int> outputs;
  std::vector<int> inputs;
};

std::vector<Block> blocks_of(const std::vector<int>& rgs, const std::vector<std::pair<bool, int>>& pts) {
  const int nb = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
  std::vector<Block> blocks(static_cast<std::size_t>(nb));
  for (std::size_t k = 0; k < rgs.size(); ++k) {
    auto& blk = blocks[static_cast<std::size_t>(rgs[k])];
    (pts[k].first ? blk.outputs : blk.inputs).push_back(pts[k].second);
  }
  return blocks;
}

}  // namespace

SpanningSet enumerate_generic(const SignaturePtr& sig, int p, int q, int max_boxes, std::size_t candidate_cap) {
  if (max_boxes < 0) throw std::invalid_argument("max_boxes must be nonnegative");
  if (p < 0 || q < 0) throw std::invalid_argument("negative arity");
  SpanningSet set{sig, p, q, max_boxes, "generic", {}, {}};
  Collector out(set.stats);
  std::size_t used = 0;
  const std::size_t ng = sig->size();
  std::vector<int> counts(ng, 0);
  auto rec = [&](auto& self, std::size_t g, int remaining) -> void {
    if (g == ng) {
      int sources = q;
      int sinks = p;
      std::vector<std::size_t> boxes;
      for (std::size_t i = 0; i < ng; ++i) {
        sources += counts[i] * sig->at(i).outputs;
        sinks += counts[i] * sig->at(i).inputs;
        boxes.insert(boxes.end(), static_cast<std::size_t>(counts[i]), i);
      }
      if (sources != sinks) return;
      if (p == 0 && q == 0 && !boxes.empty()) return;  // every box would sit in a closed component
      MatchingWalker(sig, p, q, std::move(boxes), used, candidate_cap, out, set.stats).run();
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[g] = c;
      self(self, g + 1, remaining - c);
    }
    counts[g] = 0;
  };
  rec(rec, 0, max_boxes);
  set.diagrams = std::move(out).sorted();
  return set;
}

SpanningSet enumerate_permutations(const SignaturePtr& sig, int p) {
  if (p < 0) throw std::invalid_argument("negative arity");
  SpanningSet set{sig, p, p, 0, "permutation", {}, {}};
  Collector out(set.stats);
  std::vector<int> sigma(static_cast<std::size_t>(p));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    out.add(Diagram::permutation(sig, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  set.diagrams = std::move(out).ordered();
  set.stats.candidates = set.diagrams.size() + set.stats.duplicates;
  return set;
}

SpanningSet enumerate_brauer(const SignaturePtr& sig, int p, int q) {
  require_generator(*sig, "c", 0, 2, "brauer");
  require_generator(*sig, "d", 2, 0, "brauer");
  SpanningSet set{sig, p, q, 0, "brauer", {}, {}};
  if ((p + q) % 2 != 0) return set;
  Collector out(set.stats);
  const auto pts = interleaved_points(p, q);
  const int n = static_cast<int>(pts.size());
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  auto emit = [&] {
    DiagramBuilder b(sig, p, q);
    for (int a = 0; a < n; ++a) {
      const int z = partner[static_cast<std::size_t>(a)];
      if (z < a) continue;
      const auto [a_out, ai] = pts[static_cast<std::size_t>(a)];
      const auto [z_out, zi] = pts[static_cast<std::size_t>(z)];
      if (a_out && z_out) {
        const int d = b.add_box("d");
        b.connect(Source::box_output(d, 0), Sink::boundary(ai));
        b.connect(Source::box_output(d, 1), Sink::boundary(zi));
      } else if (!a_out && !z_out) {
        const int c = b.add_box("c");
        b.connect(Source::boundary(ai), Sink::box_input(c, 0));
        b.connect(Source::boundary(zi), Sink::box_input(c, 1));
      } else if (a_out) {
        b.connect(Source::boundary(zi), Sink::boundary(ai));
      } else {
        b.connect(Source::boundary(ai), Sink::boundary(zi));
      }
    }
    ++set.stats.candidates;
    out.add(b.build());
  };
  auto rec = [&](auto& self) -> void {
    int first = -1;
    for (int k = 0; k < n; ++k) {
      if (partner[static_cast<std::size_t>(k)] < 0) {
        first = k;
        break;
      }
    }
    if (first < 0) {
      emit();
      return;
    }
    for (int k = first + 1; k < n; ++k) {
      if (partner[static_cast<std::size_t>(k)] >= 0) continue;
      partner[static_cast<std::size_t>(first)] = k;
      partner[static_cast<std::size_t>(k)] = first;
      self(self);
      partner[static_cast<std::size_t>(first)] = -1;
      partner[static_cast<std::size_t>(k)] = -1;
    }
  };
  rec(rec);
  set.diagrams = std::move(out).ordered();
  return set;
}

SpanningSet enumerate_partition(const SignaturePtr& sig, int p, int q) {
  require_generator(*sig, "m", 1, 2, "partition");
  require_generator(*sig, "u", 1, 0, "partition");
  require_generator(*sig, "c", 2, 0, "partition");
  SpanningSet set{sig, p, q, 0, "partition", {}, {}};
  Collector out(set.stats);
  const auto pts = interleaved_points(p, q);
  for (const auto& rgs : set_partitions(static_cast<int>(pts.size()))) {
    TreeBuilder tb(sig, p, q);
    for (const Block& blk : blocks_of(rgs, pts)) {
      const int a = static_cast<int>(blk.inputs.size());
      const int b = static_cast<int>(blk.outputs.size());
      std::vector<Source> strands;
      if (a > 0) {
        std::vector<Source> ins;
        for (int j : blk.inputs) ins.push_back(Source::boundary(j));
        const Source x = tb.merge(ins);
        if (b == 0) {
          tb.absorb_into_self_loop(x);
          continue;
        }
        strands = tb.fan(x, b);
      } else if (b == 1) {
        strands = {tb.box("u", {})};
      } else {
        auto [c0, c1] = tb.copair();
        strands = tb.fan(c1, b - 1);
        strands.insert(strands.begin(), c0);
      }
      for (int k = 0; k < b; ++k) tb.to_output(strands[static_cast<std::size_t>(k)], blk.outputs[static_cast<std::size_t>(k)]);
    }
    ++set.stats.candidates;
    out.add(tb.build());
  }
  set.diagrams = std::move(out).ordered();
  return set;
}

SpanningSet enumerate_cobordism(const SignaturePtr& sig, int p, int q, int genus_cutoff) {
  require_generator(*sig, "m", 1, 2, "cobordism");
  require_generator(*sig, "u", 1, 0, "cobordism");
  require_generator(*sig, "eps", 0, 1, "cobordism");
  require_generator(*sig, "c", 2, 0, "cobordism");
  if (genus_cutoff < 0) throw std::invalid_argument("genus cutoff must be nonnegative");
  SpanningSet set{sig, p, q, genus_cutoff, "cobordism", {}, {}};
  Collector out(set.stats);
  if (p == 0 && q == 0) {
    for (int g = 0; g <= genus_cutoff; ++g) {
      TreeBuilder tb(sig, 0, 0);
      tb.absorb_counit(tb.handles(tb.box("u", {}), g));
      ++set.stats.candidates;
      out.add(tb.build());
    }
    set.diagrams = std::move(out).ordered();
    return set;
  }
  const auto pts = interleaved_points(p, q);
  for (const auto& rgs : set_partitions(static_cast<int>(pts.size()))) {
    const auto blocks = blocks_of(rgs, pts);
    std::vector<int> genus(blocks.size(), 0);
    for (;;) {
      TreeBuilder tb(sig, p, q);
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& blk = blocks[i];
        const int a = static_cast<int>(blk.inputs.size());
        const int b = static_cast<int>(blk.outputs.size());
        std::vector<Source> strands;
        if (a > 0) {
          std::vector<Source> ins;
          for (int j : blk.inputs) ins.push_back(Source::boundary(j));
          const Source x = tb.handles(tb.merge(ins), genus[i]);
          if (b == 0) {
            tb.absorb_counit(x);
            continue;
          }
          strands = tb.fan(x, b);
        } else if (b == 1) {
          strands = {tb.handles(tb.box("u", {}), genus[i])};
        } else {
          auto [c0, c1] = tb.copair();
          strands = tb.fan(tb.handles(c1, genus[i]), b - 1);
          strands.insert(strands.begin(), c0);
        }
        for (int k = 0; k < b; ++k)
          tb.to_output(strands[static_cast<std::size_t>(k)], blk.outputs[static_cast<std::size_t>(k)]);
      }
      ++set.stats.candidates;
      out.add(tb.build());
      std::size_t k = 0;
      while (k < genus.size() && genus[k] == genus_cutoff) genus[k++] = 0;
      if (k == genus.size()) break;
      ++genus[k];
    }
  }
  set.diagrams = std::move(out).ordered();
  return set;
}

SpanningSet enumerate_by_name(const std::string& method, const SignaturePtr& sig, int p, int q, int cutoff) {
  if (method == "generic") return enumerate_generic(sig, p, q, cutoff);
  if (method == "permutation") {
    if (p != q) return SpanningSet{sig, p, q, 0, "permutation", {}, {}};
    return enumerate_permutations(sig, p);
  }
  if (method == "brauer") return enumerate_brauer(sig, p, q);
  if (method == "partition") return enumerate_partition(sig, p, q);
  if (method == "cobordism") return enumerate_cobordism(sig, p, q, cutoff);
  throw std::invalid_argument("unknown enumerator '" + method +
                              "' (expected generic, permutation, brauer, partition or cobordism)");
}

Diagram handle_diagram(const SignaturePtr& sig) {
  TreeBuilder tb(sig, 1, 1);
  tb.to_output(tb.handles(Source::boundary(0), 1), 0);
  return tb.build();
}

int closed_genus(const Diagram& connected) {
  if (!connected.is_closed()) throw std::invalid_argument("closed_genus: diagram is open");
  if (connected.num_boxes() == 0) return 1;  // a closed cylinder is a torus
  const int twice = 2 - connected.count("u") - connected.count("eps") + connected.count("m") + connected.count("Delta");
  if (twice % 2 != 0 || twice < 0) throw std::invalid_argument("closed_genus: not a closed connected surface");
  return twice / 2;
}

}  // namespace icat
