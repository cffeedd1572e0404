#include "icat/diagram_io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace icat {

namespace {

std::string box_label(const Diagram& d, const std::vector<int>& occurrence, int b) {
  return d.box_generator(b).name + "#" + std::to_string(occurrence[static_cast<std::size_t>(b)]);
}

/// Minimal recursive-descent scanner over the literal grammar.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t end = std::min(text_.size(), pos_ + 16);
    throw std::invalid_argument("diagram literal: " + what + " at offset " + std::to_string(pos_) + " near '" +
                                std::string(text_.substr(pos_, end - pos_)) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct PortRef {
  std::string owner;  // "bnd" or "name#k"
  bool is_out = false;
  int index = 0;
};

PortRef parse_port(Scanner& s) {
  PortRef p;
  p.owner = s.ident();
  if (p.owner != "bnd") {
    s.expect('#');
    p.owner += "#" + std::to_string(s.integer());
  }
  s.expect('.');
  const std::string dir = s.ident();
  if (dir == "out") {
    p.is_out = true;
  } else if (dir != "in") {
    s.fail("port direction must be 'in' or 'out'");
  }
  s.expect('[');
  p.index = s.integer();
  s.expect(']');
  return p;
}

}  // namespace

std::string format_diagram(const Diagram& d) {
  std::map<std::size_t, int> seen;
  std::vector<int> occurrence;
  for (std::size_t g : d.boxes()) occurrence.push_back(seen[g]++);
  std::string out = "boxes: [";
  for (int b = 0; b < static_cast<int>(d.num_boxes()); ++b) {
    if (b > 0) out += ", ";
    out += box_label(d, occurrence, b);
  }
  out += "]; wires: [";
  for (int s = 0; s < d.num_sources(); ++s) {
    if (s > 0) out += ", ";
    const Source src = d.source(s);
    const Sink dst = d.sink(d.sink_of(s));
    out += "(";
    out += src.is_boundary() ? "bnd.in[" + std::to_string(src.index) + "]"
                             : box_label(d, occurrence, src.box) + ".out[" + std::to_string(src.index) + "]";
    out += ", ";
    out += dst.is_boundary() ? "bnd.out[" + std::to_string(dst.index) + "]"
                             : box_label(d, occurrence, dst.box) + ".in[" + std::to_string(dst.index) + "]";
    out += ")";
  }
  out += "]; in: " + std::to_string(d.inputs()) + "; out: " + std::to_string(d.outputs());
  if (d.loops() > 0) out += "; loops: " + std::to_string(d.loops());
  return out;
}

Diagram parse_diagram(const SignaturePtr& sig, std::string_view text) {
  Scanner s(text);
  std::optional<std::vector<std::string>> boxes;
  std::optional<std::vector<std::pair<PortRef, PortRef>>> wires;
  std::optional<int> in;
  std::optional<int> out;
  int loops = 0;
  while (!s.at_end()) {
    const std::string field = s.ident();
    s.expect(':');
    if (field == "boxes") {
      boxes.emplace();
      s.expect('[');
      if (!s.accept(']')) {
        do {
          std::string name = s.ident();
          s.expect('#');
          name += "#" + std::to_string(s.integer());
          boxes->push_back(std::move(name));
        } while (s.accept(','));
        s.expect(']');
      }
    } else if (field == "wires") {
      wires.emplace();
      s.expect('[');
      if (!s.accept(']')) {
        do {
          s.expect('(');
          PortRef a = parse_port(s);
          s.expect(',');
          PortRef b = parse_port(s);
          s.expect(')');
          wires->emplace_back(std::move(a), std::move(b));
        } while (s.accept(','));
        s.expect(']');
      }
    } else if (field == "in") {
      in = s.integer();
    } else if (field == "out") {
      out = s.integer();
    } else if (field == "loops") {
      loops = s.integer();
    } else {
      s.fail("unknown field '" + field + "'");
    }
    if (!s.accept(';') && !s.at_end()) s.fail("expected ';'");
  }
  if (!boxes || !wires || !in || !out) throw std::invalid_argument("diagram literal: missing boxes, wires, in or out");

  DiagramBuilder b(sig, *out, *in);
  std::map<std::string, int> box_index;
  for (const auto& label : *boxes) {
    const std::string name = label.substr(0, label.find('#'));
    if (!sig->find(name)) throw std::invalid_argument("diagram literal: unknown generator '" + name + "'");
    if (!box_index.emplace(label, b.add_box(name)).second)
      throw std::invalid_argument("diagram literal: duplicate box '" + label + "'");
  }
  auto owner_box = [&](const PortRef& p) {
    auto it = box_index.find(p.owner);
    if (it == box_index.end()) throw std::invalid_argument("diagram literal: undeclared box '" + p.owner + "'");
    return it->second;
  };
  for (const auto& [a, c] : *wires) {
    // Each wire joins one source (bnd.in or box out) to one sink (bnd.out or box in).
    const bool a_source = (a.owner == "bnd") ? !a.is_out : a.is_out;
    const bool c_source = (c.owner == "bnd") ? !c.is_out : c.is_out;
    if (a_source == c_source)
      throw std::invalid_argument("diagram literal: wire must join a source to a sink (" + a.owner + ", " + c.owner +
                                  ")");
    const PortRef& src = a_source ? a : c;
    const PortRef& dst = a_source ? c : a;
    const Source from = src.owner == "bnd" ? Source::boundary(src.index) : Source::box_output(owner_box(src), src.index);
    const Sink to = dst.owner == "bnd" ? Sink::boundary(dst.index) : Sink::box_input(owner_box(dst), dst.index);
    b.connect(from, to);
  }
  b.add_loops(loops);
  return b.build();
}

}  // namespace icat
