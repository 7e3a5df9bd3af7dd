#include "hyperkernel/fixtures.hpp"

#include "hyperkernel/error.hpp"
#include "hyperkernel/group.hpp"
#include "hyperkernel/hypfile.hpp"

namespace hyperkernel {

namespace {

constexpr std::string_view kH9 = R"(# Nine-element canonical hypergroup with fundamental group V4.
name: h9
elements: e a b c x y z u v
row e: {e}   {a}   {b}   {c}   {x}     {y}     {z}     {u}     {v}
row a: {a}   {e}   {c}   {b}   {x}     {y}     {u}     {z}     {v}
row b: {b}   {c}   {e}   {a}   {y}     {x}     {z}     {u}     {v}
row c: {c}   {b}   {a}   {e}   {y}     {x}     {u}     {z}     {v}
row x: {x}   {x}   {y}   {y}   {b,c}   {e,a}   {v}     {v}     {z,u}
row y: {y}   {y}   {x}   {x}   {e,a}   {b,c}   {v}     {v}     {z,u}
row z: {z}   {u}   {z}   {u}   {v}     {v}     {a,c}   {e,b}   {x,y}
row u: {u}   {z}   {u}   {z}   {v}     {v}     {e,b}   {a,c}   {x,y}
row v: {v}   {v}   {v}   {v}   {z,u}   {z,u}   {x,y}   {x,y}   {e,a,b,c}
)";

constexpr std::string_view kH9Quotient = R"(# h9 modulo K = {e,a}, cosets named by least representative.
name: h9-quotient
elements: K b∘K x∘K y∘K z∘K v∘K
row K:   {K}   {b∘K} {x∘K} {y∘K} {z∘K}     {v∘K}
row b∘K: {b∘K} {K}   {y∘K} {x∘K} {z∘K}     {v∘K}
row x∘K: {x∘K} {y∘K} {b∘K} {K}   {v∘K}     {z∘K}
row y∘K: {y∘K} {x∘K} {K}   {b∘K} {v∘K}     {z∘K}
row z∘K: {z∘K} {z∘K} {v∘K} {v∘K} {K,b∘K}   {x∘K,y∘K}
row v∘K: {v∘K} {v∘K} {z∘K} {z∘K} {x∘K,y∘K} {K,b∘K}
)";

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"h9", "h9-quotient", "z2", "z3", "z4", "v4", "s3", "t2", "t3", "t4"};
  return names;
}

std::optional<std::string> fixture_text(std::string_view name) {
  if (name == "h9") return std::string(kH9);
  if (name == "h9-quotient") return std::string(kH9Quotient);
  const std::string n(name);
  if (name == "z2" || name == "z3" || name == "z4") return emit_hyp(from_group(cyclic_group(n[1] - '0')), n);
  if (name == "v4") return emit_hyp(from_group(klein_four_group()), n);
  if (name == "s3") return emit_hyp(from_group(symmetric_group_3()), n);
  if (name == "t2" || name == "t3" || name == "t4") return emit_hyp(total_hypergroup(n[1] - '0'), n);
  return std::nullopt;
}

HyperTable fixture(std::string_view name) {
  const std::optional<std::string> text = fixture_text(name);
  if (!text) fail(ErrorKind::UnknownFixture, "no fixture named " + std::string(name));
  return parse_hyp(*text).table;
}

}  // namespace hyperkernel
