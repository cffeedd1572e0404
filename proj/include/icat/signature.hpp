#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icat {

/// A structure tensor symbol with `outputs` upper and `inputs` lower legs,
/// i.e. an element of W^{outputs, inputs}.
struct Generator {
  std::string name;
  int outputs = 0;
  int inputs = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered generator list plus interpolation parameter names.
class Signature {
 public:
  Signature() = default;
  /// Throws std::invalid_argument on duplicate or malformed names, negative
  /// arities, or a (0,0) generator.
  explicit Signature(std::vector<Generator> generators, std::vector<std::string> params = {});

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<std::string>& params() const { return params_; }
  std::size_t size() const { return generators_.size(); }
  const Generator& at(std::size_t index) const { return generators_.at(index); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::invalid_argument for unknown names.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Generator> generators_;
  std::vector<std::string> params_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<Generator> generators, std::vector<std::string> params = {});

/// Same generator list (parameter names may differ).
bool same_generators(const Signature& a, const Signature& b);

/// Generator names are restricted to [A-Za-z0-9_]+ so they survive the
/// diagram literal format and canonical keys unescaped.
bool valid_generator_name(std::string_view name);

/// Standard signatures, shared so diagrams and models agree by pointer.
SignaturePtr gl_signature();         // no generators; parameter t
SignaturePtr endo_signature();       // T:(1,1); parameter t
SignaturePtr brauer_signature();     // c:(0,2), d:(2,0); parameter t
SignaturePtr partition_signature();  // m:(1,2), u:(1,0), c:(2,0); parameter t
SignaturePtr frobenius_signature();  // m:(1,2), u:(1,0), eps:(0,1), c:(2,0)
/// Group-algebra signature m, Delta, u, eps, S and one T<digits> per element
/// x of Z/q^r, digits of x in base q from low to high. With binary_only,
/// only x whose digits are all 0 or 1 are included (independent of q).
/// Parameters t1..tr.
SignaturePtr group_algebra_signature(int q, int r, bool binary_only);

}  // namespace icat
