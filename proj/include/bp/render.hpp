#pragma once

#include "bp/tensor.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bp {

// Surface syntax, grammar-compatible: "b P2 P0", "1" for the empty word.
std::string to_text(const Monomial& m);

// "2 P2 P0 + b"; scalars render with an explicit unit ("2 1") so that
// printing and parsing are mutually inverse; "0" for the zero element.
std::string to_text(const Element& e, const Prime& p);

// Tensor terms as "l (x) r", e.g. "2 b P0 (x) P0 b + P0 b (x) b P0".
std::string to_text(const TensorElement& t, const Prime& p);

// Letter records: {"g":"b"} or {"g":"P","k":int}.
nlohmann::ordered_json word_to_json(const Monomial& m);

// Fixed schema, byte-stable under the display order:
// {"p":int,"terms":[{"c":int,"w":[letter,...],"deg":[n,s]},...]}
nlohmann::ordered_json element_to_json(const Element& e, const Prime& p);

// [{"c":int,"l":[letter,...],"r":[letter,...]},...] in display order.
nlohmann::ordered_json tensor_terms_to_json(const TensorElement& t, const Prime& p);

// Support in display order (degree, length, letters).
std::vector<std::pair<Monomial, Fp>> display_sorted(const Element& e, const Prime& p);
std::vector<std::pair<TensorMonomial, Fp>> display_sorted(const TensorElement& t, const Prime& p);

}  // namespace bp
