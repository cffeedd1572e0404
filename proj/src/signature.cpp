#include "icat/signature.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace icat {

bool valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "bnd";
}

Signature::Signature(std::vector<Generator> generators, std::vector<std::string> params)
    : generators_(std::move(generators)), params_(std::move(params)) {
  std::set<std::string, std::less<>> seen;
  for (const auto& g : generators_) {
    if (!valid_generator_name(g.name)) throw std::invalid_argument("invalid generator name '" + g.name + "'");
    if (g.outputs < 0 || g.inputs < 0) throw std::invalid_argument("negative arity for generator '" + g.name + "'");
    if (g.outputs == 0 && g.inputs == 0)
      throw std::invalid_argument("generator '" + g.name + "' has arity (0,0); scalars are not tensors");
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator name '" + g.name + "'");
  }
  std::set<std::string> pseen;
  for (const auto& p : params_) {
    if (!pseen.insert(p).second) throw std::invalid_argument("duplicate parameter name '" + p + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

SignaturePtr make_signature(std::vector<Generator> generators, std::vector<std::string> params) {
  return std::make_shared<const Signature>(std::move(generators), std::move(params));
}

bool same_generators(const Signature& a, const Signature& b) { return a.generators() == b.generators(); }

SignaturePtr gl_signature() {
  static const SignaturePtr sig = make_signature({}, {"t"});
  return sig;
}

SignaturePtr endo_signature() {
  static const SignaturePtr sig = make_signature({{"T", 1, 1}}, {"t"});
  return sig;
}

SignaturePtr brauer_signature() {
  static const SignaturePtr sig = make_signature({{"c", 0, 2}, {"d", 2, 0}}, {"t"});
  return sig;
}

SignaturePtr partition_signature() {
  static const SignaturePtr sig = make_signature({{"m", 1, 2}, {"u", 1, 0}, {"c", 2, 0}}, {"t"});
  return sig;
}

SignaturePtr frobenius_signature() {
  static const SignaturePtr sig = make_signature({{"m", 1, 2}, {"u", 1, 0}, {"eps", 0, 1}, {"c", 2, 0}});
  return sig;
}

SignaturePtr group_algebra_signature(int q, int r, bool binary_only) {
  if (q < 2 || r < 1) throw std::invalid_argument("group algebra signature needs q >= 2 and r >= 1");
  std::vector<Generator> gens = {{"m", 1, 2}, {"Delta", 2, 1}, {"u", 1, 0}, {"eps", 0, 1}, {"S", 1, 1}};
  const int base = binary_only ? 2 : q;
  long count = 1;
  for (int i = 0; i < r; ++i) count *= base;
  for (long x = 0; x < count; ++x) {
    std::string name = "T";
    long rest = x;
    for (int i = 0; i < r; ++i) {
      name += std::to_string(rest % base);
      rest /= base;
    }
    gens.push_back({name, 1, 1});
  }
  std::vector<std::string> params;
  for (int i = 1; i <= r; ++i) params.push_back("t" + std::to_string(i));
  return make_signature(std::move(gens), std::move(params));
}

}  // namespace icat
