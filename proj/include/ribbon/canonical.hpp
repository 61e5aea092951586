#pragma once

#include <compare>
#include <functional>
#include <string>

#include "ribbon/arrow_presentation.hpp"

namespace ribbon {

/**
 * Equivalence-class key of an arrow presentation.
 *
 * Two presentations share a key iff one can be turned into the other by
 * permuting circles, rotating a circle, reversing a circle (which flips every
 * sign on it), renaming labels, and reversing both arrows of one label. The
 * last move does not change the glued ribbon, so it is part of equivalence.
 *
 * The text is itself a presentation: circles in parentheses, labels are
 * consecutive integers, e.g. "(0+ 1+ 0+ 1+)(2+)(2+)()".
 */
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string text) : text_(std::move(text)) {}

  const std::string& str() const { return text_; }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::string text_;
};

CanonicalForm canonicalize(const ArrowPresentation& g);
bool is_equivalent(const ArrowPresentation& g, const ArrowPresentation& h);

/// The representative presentation spelled by a canonical form.
ArrowPresentation from_canonical(const CanonicalForm& form);

/// Isomorphism key of the abstract multigraph (loops and parallel edges kept).
std::string graph_key(const UnderlyingGraph& graph);
bool is_graph_isomorphic(const ArrowPresentation& g, const ArrowPresentation& h);

}  // namespace ribbon

template <>
struct std::hash<ribbon::CanonicalForm> {
  std::size_t operator()(const ribbon::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.str());
  }
};
