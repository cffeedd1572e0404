#include "icat/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace icat {

namespace {

void require_same_signature(const Diagram& a, const Diagram& b, const char* op) {
  if (a.signature_ptr() != b.signature_ptr() && !same_generators(a.signature(), b.signature()))
    throw std::invalid_argument(std::string(op) + ": diagrams over different signatures");
}

std::string arity(const Diagram& d) {
  return "(" + std::to_string(d.outputs()) + "," + std::to_string(d.inputs()) + ")";
}

}  // namespace

Diagram::Diagram(SignaturePtr sig, int outputs, int inputs, std::vector<std::size_t> boxes, std::vector<int> wiring,
                 int loops)
    : sig_(std::move(sig)),
      outputs_(outputs),
      inputs_(inputs),
      boxes_(std::move(boxes)),
      wiring_(std::move(wiring)),
      loops_(loops) {
  if (!sig_) throw std::invalid_argument("diagram without signature");
  if (outputs_ < 0 || inputs_ < 0 || loops_ < 0) throw std::invalid_argument("negative diagram arity");
  int nsrc = inputs_;
  int nsnk = outputs_;
  source_offset_.reserve(boxes_.size());
  sink_offset_.reserve(boxes_.size());
  for (std::size_t g : boxes_) {
    if (g >= sig_->size()) throw std::invalid_argument("box refers to unknown generator");
    source_offset_.push_back(nsrc);
    sink_offset_.push_back(nsnk);
    nsrc += sig_->at(g).outputs;
    nsnk += sig_->at(g).inputs;
  }
  if (nsrc != nsnk || static_cast<int>(wiring_.size()) != nsrc)
    throw std::invalid_argument("wiring is not a perfect matching: " + std::to_string(nsrc) + " sources, " +
                                std::to_string(nsnk) + " sinks, " + std::to_string(wiring_.size()) + " wires");
  inverse_.assign(static_cast<std::size_t>(nsnk), -1);
  for (int s = 0; s < nsrc; ++s) {
    const int t = wiring_[static_cast<std::size_t>(s)];
    if (t < 0 || t >= nsnk || inverse_[static_cast<std::size_t>(t)] != -1)
      throw std::invalid_argument("wiring is not a bijection");
    inverse_[static_cast<std::size_t>(t)] = s;
  }
}

Diagram Diagram::identity(SignaturePtr sig, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  return Diagram(std::move(sig), n, n, {}, std::move(w));
}

Diagram Diagram::permutation(SignaturePtr sig, std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> w(sigma.begin(), sigma.end());
  std::vector<bool> hit(sigma.size(), false);
  for (int v : w) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) throw std::invalid_argument("not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
  return Diagram(std::move(sig), n, n, {}, std::move(w));
}

Diagram Diagram::generator(SignaturePtr sig, std::string_view name) {
  const std::size_t g = sig->index_of(name);
  const Generator& gen = sig->at(g);
  DiagramBuilder b(sig, gen.outputs, gen.inputs);
  const int box = b.add_box(g);
  for (int k = 0; k < gen.outputs; ++k) b.connect(Source::box_output(box, k), Sink::boundary(k));
  for (int j = 0; j < gen.inputs; ++j) b.connect(Source::boundary(j), Sink::box_input(box, j));
  return b.build();
}

Diagram Diagram::loop(SignaturePtr sig, int count) { return Diagram(std::move(sig), 0, 0, {}, {}, count); }

int Diagram::source_id(Source s) const {
  if (s.is_boundary()) {
    if (s.index < 0 || s.index >= inputs_) throw std::out_of_range("open input index out of range");
    return s.index;
  }
  if (s.box < 0 || s.box >= static_cast<int>(boxes_.size())) throw std::out_of_range("box index out of range");
  if (s.index < 0 || s.index >= box_generator(s.box).outputs) throw std::out_of_range("box output out of range");
  return source_offset_[static_cast<std::size_t>(s.box)] + s.index;
}

int Diagram::sink_id(Sink t) const {
  if (t.is_boundary()) {
    if (t.index < 0 || t.index >= outputs_) throw std::out_of_range("open output index out of range");
    return t.index;
  }
  if (t.box < 0 || t.box >= static_cast<int>(boxes_.size())) throw std::out_of_range("box index out of range");
  if (t.index < 0 || t.index >= box_generator(t.box).inputs) throw std::out_of_range("box input out of range");
  return sink_offset_[static_cast<std::size_t>(t.box)] + t.index;
}

Source Diagram::source(int id) const {
  if (id < inputs_) return Source::boundary(id);
  auto it = std::upper_bound(source_offset_.begin(), source_offset_.end(), id);
  // Boxes without outputs share offsets with their successor; step back to
  // the last box whose range contains id.
  int b = static_cast<int>(it - source_offset_.begin()) - 1;
  while (b >= 0 && box_generator(b).outputs == 0) --b;
  return Source::box_output(b, id - source_offset_[static_cast<std::size_t>(b)]);
}

Sink Diagram::sink(int id) const {
  if (id < outputs_) return Sink::boundary(id);
  auto it = std::upper_bound(sink_offset_.begin(), sink_offset_.end(), id);
  int b = static_cast<int>(it - sink_offset_.begin()) - 1;
  while (b >= 0 && box_generator(b).inputs == 0) --b;
  return Sink::box_input(b, id - sink_offset_[static_cast<std::size_t>(b)]);
}

int Diagram::count(std::string_view name) const {
  const auto g = sig_->find(name);
  if (!g) return 0;
  return static_cast<int>(std::count(boxes_.begin(), boxes_.end(), *g));
}

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.outputs() != b.outputs() || a.inputs() != b.inputs() || a.num_boxes() != b.num_boxes() ||
      a.loops() != b.loops())
    return false;
  return canonical_key(a) == canonical_key(b);
}

// ------------------------------------------------------------- builder

DiagramBuilder::DiagramBuilder(SignaturePtr sig, int outputs, int inputs)
    : sig_(std::move(sig)), outputs_(outputs), inputs_(inputs) {}

int DiagramBuilder::add_box(std::string_view name) { return add_box(sig_->index_of(name)); }

int DiagramBuilder::add_box(std::size_t generator) {
  if (generator >= sig_->size()) throw std::invalid_argument("unknown generator index");
  boxes_.push_back(generator);
  return static_cast<int>(boxes_.size()) - 1;
}

void DiagramBuilder::connect(Source from, Sink to) { wires_.emplace_back(from, to); }

Diagram DiagramBuilder::build() const {
  std::vector<int> src_off;
  std::vector<int> snk_off;
  int nsrc = inputs_;
  int nsnk = outputs_;
  for (std::size_t g : boxes_) {
    src_off.push_back(nsrc);
    snk_off.push_back(nsnk);
    nsrc += sig_->at(g).outputs;
    nsnk += sig_->at(g).inputs;
  }
  if (nsrc != nsnk)
    throw std::invalid_argument("unbalanced diagram: " + std::to_string(nsrc) + " sources vs " +
                                std::to_string(nsnk) + " sinks");
  std::vector<int> wiring(static_cast<std::size_t>(nsrc), -1);
  std::vector<bool> sink_used(static_cast<std::size_t>(nsnk), false);
  auto src_id = [&](Source s) {
    if (s.is_boundary()) {
      if (s.index < 0 || s.index >= inputs_) throw std::invalid_argument("open input index out of range");
      return s.index;
    }
    if (s.box < 0 || s.box >= static_cast<int>(boxes_.size()) || s.index < 0 ||
        s.index >= sig_->at(boxes_[static_cast<std::size_t>(s.box)]).outputs)
      throw std::invalid_argument("box output port out of range");
    return src_off[static_cast<std::size_t>(s.box)] + s.index;
  };
  auto snk_id = [&](Sink t) {
    if (t.is_boundary()) {
      if (t.index < 0 || t.index >= outputs_) throw std::invalid_argument("open output index out of range");
      return t.index;
    }
    if (t.box < 0 || t.box >= static_cast<int>(boxes_.size()) || t.index < 0 ||
        t.index >= sig_->at(boxes_[static_cast<std::size_t>(t.box)]).inputs)
      throw std::invalid_argument("box input port out of range");
    return snk_off[static_cast<std::size_t>(t.box)] + t.index;
  };
  for (const auto& [s, t] : wires_) {
    const int si = src_id(s);
    const int ti = snk_id(t);
    if (wiring[static_cast<std::size_t>(si)] != -1) throw std::invalid_argument("source wired twice");
    if (sink_used[static_cast<std::size_t>(ti)]) throw std::invalid_argument("sink wired twice");
    wiring[static_cast<std::size_t>(si)] = ti;
    sink_used[static_cast<std::size_t>(ti)] = true;
  }
  for (int w : wiring) {
    if (w == -1) throw std::invalid_argument("unwired source port");
  }
  return Diagram(sig_, outputs_, inputs_, boxes_, std::move(wiring), loops_);
}

// ---------------------------------------------------------- operations

Diagram compose(const Diagram& g, const Diagram& f) {
  require_same_signature(g, f, "compose");
  if (g.inputs() != f.outputs())
    throw std::invalid_argument("compose: arity mismatch, outer diagram " + arity(g) + " cannot follow inner diagram " +
                                arity(f));
  const int nf = static_cast<int>(f.num_boxes());
  DiagramBuilder b(f.signature_ptr(), g.outputs(), f.inputs());
  for (std::size_t gen : f.boxes()) b.add_box(gen);
  for (std::size_t gen : g.boxes()) b.add_box(gen);
  auto through_g = [&](Sink t_in_g) -> Sink {
    if (t_in_g.is_boundary()) return t_in_g;
    return Sink::box_input(t_in_g.box + nf, t_in_g.index);
  };
  for (int s = 0; s < f.num_sources(); ++s) {
    const Source src = f.source(s);
    const Sink t = f.sink(f.sink_of(s));
    Sink dst = t.is_boundary() ? through_g(g.target(Source::boundary(t.index))) : t;
    b.connect(src, dst);
  }
  for (int s = g.inputs(); s < g.num_sources(); ++s) {
    const Source src = g.source(s);
    b.connect(Source::box_output(src.box + nf, src.index), through_g(g.sink(g.sink_of(s))));
  }
  b.add_loops(f.loops() + g.loops());
  return b.build();
}

Diagram tensor(const Diagram& f, const Diagram& g) {
  require_same_signature(f, g, "tensor");
  const int nf = static_cast<int>(f.num_boxes());
  DiagramBuilder b(f.signature_ptr(), f.outputs() + g.outputs(), f.inputs() + g.inputs());
  for (std::size_t gen : f.boxes()) b.add_box(gen);
  for (std::size_t gen : g.boxes()) b.add_box(gen);
  for (int s = 0; s < f.num_sources(); ++s) b.connect(f.source(s), f.sink(f.sink_of(s)));
  for (int s = 0; s < g.num_sources(); ++s) {
    Source src = g.source(s);
    src = src.is_boundary() ? Source::boundary(src.index + f.inputs()) : Source::box_output(src.box + nf, src.index);
    Sink t = g.sink(g.sink_of(s));
    t = t.is_boundary() ? Sink::boundary(t.index + f.outputs()) : Sink::box_input(t.box + nf, t.index);
    b.connect(src, t);
  }
  b.add_loops(f.loops() + g.loops());
  return b.build();
}

Diagram trace_close(const Diagram& f) {
  if (f.outputs() != f.inputs())
    throw std::invalid_argument("trace_close: diagram " + arity(f) + " is not square");
  const int n = f.outputs();
  DiagramBuilder b(f.signature_ptr(), 0, 0);
  for (std::size_t gen : f.boxes()) b.add_box(gen);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (int s = n; s < f.num_sources(); ++s) {
    Sink t = f.sink(f.sink_of(s));
    while (t.is_boundary()) {
      visited[static_cast<std::size_t>(t.index)] = true;
      t = f.sink(f.sink_of(t.index));
    }
    b.connect(f.source(s), t);
  }
  // Remaining open strands close up into box-free cycles.
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (visited[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    int j = i;
    while (!visited[static_cast<std::size_t>(j)]) {
      visited[static_cast<std::size_t>(j)] = true;
      j = f.sink(f.sink_of(j)).index;
    }
  }
  b.add_loops(f.loops() + cycles);
  return b.build();
}

Diagram power(const Diagram& f, int n) {
  if (f.outputs() != f.inputs()) throw std::invalid_argument("power: diagram is not square");
  Diagram result = Diagram::identity(f.signature_ptr(), f.outputs());
  for (int k = 0; k < n; ++k) result = compose(f, result);
  return result;
}

namespace {

/// Boxes adjacent to box b (through any wire), in port order.
template <class Fn>
void for_each_neighbour(const Diagram& d, int b, Fn&& fn) {
  const Generator& gen = d.box_generator(b);
  for (int k = 0; k < gen.outputs; ++k) {
    const Sink t = d.target(Source::box_output(b, k));
    if (!t.is_boundary()) fn(t.box);
  }
  for (int j = 0; j < gen.inputs; ++j) {
    const Source s = d.origin(Sink::box_input(b, j));
    if (!s.is_boundary()) fn(s.box);
  }
}

/// Extends `order` by breadth-first discovery starting from its current content.
void bfs_extend(const Diagram& d, std::vector<int>& order, std::vector<int>& label) {
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    for_each_neighbour(d, order[idx], [&](int nb) {
      if (label[static_cast<std::size_t>(nb)] < 0) {
        label[static_cast<std::size_t>(nb)] = static_cast<int>(order.size());
        order.push_back(nb);
      }
    });
  }
}

/// Restricts d to the listed boxes (which must be closed under adjacency
/// except through the boundary), renumbering them in the listed order.
Diagram relabel(const Diagram& d, const std::vector<int>& order, int outputs, int inputs, int loops) {
  std::vector<int> pos(d.num_boxes(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  DiagramBuilder b(d.signature_ptr(), outputs, inputs);
  for (int old : order) b.add_box(d.boxes()[static_cast<std::size_t>(old)]);
  auto map_sink = [&](Sink t) {
    return t.is_boundary() ? t : Sink::box_input(pos[static_cast<std::size_t>(t.box)], t.index);
  };
  if (outputs > 0 || inputs > 0) {
    for (int j = 0; j < inputs; ++j) b.connect(Source::boundary(j), map_sink(d.target(Source::boundary(j))));
  }
  for (int old : order) {
    const int nb = pos[static_cast<std::size_t>(old)];
    for (int k = 0; k < d.box_generator(old).outputs; ++k)
      b.connect(Source::box_output(nb, k), map_sink(d.target(Source::box_output(old, k))));
  }
  b.add_loops(loops);
  return b.build();
}

std::string serialize(const Diagram& d) {
  std::string out = std::to_string(d.outputs()) + ":" + std::to_string(d.inputs()) + ":" + std::to_string(d.loops()) + "|";
  for (std::size_t g : d.boxes()) {
    out += d.signature().at(g).name;
    out += ';';
  }
  out += '|';
  for (int w : d.wiring()) {
    out += std::to_string(w);
    out += ',';
  }
  return out;
}

/// Minimal encoding over all roots of a closed connected component, returned
/// with the box order achieving it.
std::pair<std::string, std::vector<int>> canonical_component(const Diagram& d, const std::vector<int>& members) {
  std::string best;
  std::vector<int> best_order;
  std::vector<int> label(d.num_boxes(), -1);
  for (int root : members) {
    for (int m : members) label[static_cast<std::size_t>(m)] = -1;
    std::vector<int> order{root};
    label[static_cast<std::size_t>(root)] = 0;
    bfs_extend(d, order, label);
    std::string code = serialize(relabel(d, order, 0, 0, 0));
    if (best_order.empty() || code < best) {
      best = std::move(code);
      best_order = std::move(order);
    }
  }
  return {best, best_order};
}

/// Splits boxes not reachable from the boundary into closed components.
std::vector<std::vector<int>> closed_components(const Diagram& d, std::vector<int>& label) {
  std::vector<std::vector<int>> comps;
  for (int b = 0; b < static_cast<int>(d.num_boxes()); ++b) {
    if (label[static_cast<std::size_t>(b)] >= 0) continue;
    std::vector<int> order{b};
    label[static_cast<std::size_t>(b)] = 0;
    bfs_extend(d, order, label);
    comps.push_back(std::move(order));
  }
  return comps;
}

}  // namespace

std::vector<Diagram> connected_components(const Diagram& closed) {
  if (!closed.is_closed()) throw std::invalid_argument("connected_components: diagram is not closed");
  std::vector<int> label(closed.num_boxes(), -1);
  std::vector<Diagram> out;
  for (auto& members : closed_components(closed, label)) {
    std::sort(members.begin(), members.end());
    out.push_back(relabel(closed, members, 0, 0, 0));
  }
  for (int i = 0; i < closed.loops(); ++i) out.push_back(Diagram::loop(closed.signature_ptr()));
  return out;
}

CanonicalForm canonicalize(const Diagram& d) {
  std::vector<int> label(d.num_boxes(), -1);
  std::vector<int> order;
  auto discover = [&](int b) {
    if (b >= 0 && label[static_cast<std::size_t>(b)] < 0) {
      label[static_cast<std::size_t>(b)] = static_cast<int>(order.size());
      order.push_back(b);
    }
  };
  for (int i = 0; i < d.outputs(); ++i) discover(d.origin(Sink::boundary(i)).box);
  for (int j = 0; j < d.inputs(); ++j) discover(d.target(Source::boundary(j)).box);
  bfs_extend(d, order, label);

  std::vector<std::pair<std::string, std::vector<int>>> comps;
  for (const auto& members : closed_components(d, label)) comps.push_back(canonical_component(d, members));
  std::sort(comps.begin(), comps.end());
  for (const auto& [code, members] : comps) order.insert(order.end(), members.begin(), members.end());

  Diagram canon = relabel(d, order, d.outputs(), d.inputs(), d.loops());
  std::string key = serialize(canon);
  return {std::move(canon), std::move(key)};
}

std::string canonical_key(const Diagram& d) { return canonicalize(d).key; }

std::string closed_diagram_key(const Diagram& connected) {
  if (!connected.is_closed()) throw std::invalid_argument("closed_diagram_key: diagram is open");
  const bool single = (connected.num_boxes() == 0 && connected.loops() == 1) ||
                      (connected.num_boxes() > 0 && connected.loops() == 0 &&
                       connected_components(connected).size() == 1);
  if (!single) throw std::invalid_argument("closed_diagram_key: diagram is not connected");
  return canonical_key(connected);
}

}  // namespace icat
