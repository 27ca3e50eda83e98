#pragma once

#include <compare>
#include <functional>
#include <string>
#include <utility>

namespace typik {

// Case-sensitive symbol of one name category. Distinct categories are distinct types.
template <class Tag>
class Name {
 public:
  Name() = default;
  explicit Name(std::string text) : text_(std::move(text)) {}

  const std::string& str() const { return text_; }

  friend bool operator==(const Name&, const Name&) = default;
  friend auto operator<=>(const Name&, const Name&) = default;

 private:
  std::string text_;
};

struct ConceptTag {};
struct RoleTag {};
struct IndividualTag {};

using ConceptName = Name<ConceptTag>;
using RoleName = Name<RoleTag>;
using IndividualName = Name<IndividualTag>;

// Reserved spellings of the distinguished concepts.
inline const std::string kTopSpelling = "Top";
inline const std::string kBotSpelling = "Bot";

inline ConceptName top_name() { return ConceptName(kTopSpelling); }
inline ConceptName bot_name() { return ConceptName(kBotSpelling); }

}  // namespace typik

template <class Tag>
struct std::hash<typik::Name<Tag>> {
  size_t operator()(const typik::Name<Tag>& n) const noexcept {
    return std::hash<std::string>{}(n.str());
  }
};
