#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gsk/gset.hpp"

namespace gsk {

/// X <-left- U -right-> Y
struct Span {
  GMap left;
  GMap right;

  const GSet& source() const { return left.target; }
  const GSet& apex() const { return left.source; }
  const GSet& target() const { return right.target; }
};

Span make_span(GMap left, GMap right);
Span identity_span(const GSet& X);
/// X <- emptyset -> Y
Span zero_span(const GSet& X, const GSet& Y);
/// Disjoint union of apexes.
Span span_sum(const Span& s, const Span& t);
/// Apex is the pullback of s.right and t.left; s first, then t.
Span compose_span_diagrams(const Span& s, const Span& t);

/// Restriction K <= H: G/H <- G/K -id-> G/K.
Span restriction_span(const Subgroup& H, const Subgroup& K);
/// Transfer K <= H: G/K <-id- G/K -> G/H.
Span transfer_span(const Subgroup& K, const Subgroup& H);
/// Conjugation: G/H <-id- G/H -> G/gHg^-1, xH -> x g^-1 (gHg^-1).
Span conjugation_span(const Subgroup& H, Element g);

/// Isomorphism invariant of a G-set over a base: for each orbit of the source,
/// the lexicographically least G-translate of (images..., sorted stabilizer).
using OrbitKey = std::vector<int>;
using CanonicalForm = std::vector<OrbitKey>;

/// Canonical form of the G-set U over X x Y recorded by a span.
CanonicalForm canonical_form(const Span& s);
/// Canonical form of a G-set over a base.
CanonicalForm canonical_form(const GMap& over);

/// A span held up to apex isomorphism commuting with both legs.
struct SpanClass {
  Span representative;
  CanonicalForm form;

  friend bool operator==(const SpanClass& a, const SpanClass& b) { return a.form == b.form; }
};

SpanClass span_class(const Span& s);
SpanClass compose_spans(const Span& s, const Span& t);

constexpr int kApexCap = 64;

/// Decides apex isomorphism commuting with both legs by backtracking over
/// orbit matchings; throws ApexTooLarge past kApexCap points.
bool spans_equal(const Span& s, const Span& t);

/// Formal integer combination of transitive span classes with fixed ends.
class VirtualSpan {
 public:
  VirtualSpan(GSet source, GSet target);
  static VirtualSpan from_span(const Span& s, std::int64_t coefficient = 1);

  const GSet& source() const { return source_; }
  const GSet& target() const { return target_; }
  /// Transitive summand canonical forms with their coefficients (zero terms dropped).
  const std::map<CanonicalForm, std::int64_t>& terms() const { return terms_; }

  VirtualSpan& operator+=(const VirtualSpan& other);
  friend VirtualSpan operator+(VirtualSpan a, const VirtualSpan& b) { return a += b; }
  friend VirtualSpan operator-(VirtualSpan a, const VirtualSpan& b);
  friend VirtualSpan operator*(std::int64_t k, VirtualSpan a);
  /// a first, then b.
  friend VirtualSpan compose(const VirtualSpan& a, const VirtualSpan& b);

  friend bool operator==(const VirtualSpan& a, const VirtualSpan& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const CanonicalForm& form, const Span& rep, std::int64_t coefficient);

  GSet source_;
  GSet target_;
  std::map<CanonicalForm, std::int64_t> terms_;
  std::map<CanonicalForm, Span> reps_;
};

/// The transitive pieces of a span, one per apex orbit.
std::vector<Span> transitive_summands(const Span& s);

/// Pulls a G-set over X back along s.left and pushes it forward along s.right.
GMap transport_over(const GMap& over, const Span& s);
/// Preimage of a base point as a set acted on by the point's stabilizer.
GSet fiber_gset(const GMap& over, int base_point);

}  // namespace gsk
