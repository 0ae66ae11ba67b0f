#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sincbounds/dd.hpp"
#include "sincbounds/real.hpp"
#include "sincbounds/verifier/grid.hpp"

namespace sincb::verifier {

// One required inequality lhs < rhs (strict) or lhs <= rhs.
template <Real R>
struct Check {
  R lhs;
  R rhs;
  bool strict;
};

// Fixed-capacity list of checks produced at one grid point. An empty list
// means the point lies in an exclusion zone for this claim.
template <Real R>
class CheckList {
 public:
  static constexpr std::size_t capacity = 16;

  void lt(R a, R b) { push({a, b, true}); }
  void le(R a, R b) { push({a, b, false}); }

  // Strictly increasing chain: one check per adjacent pair.
  void chain(std::initializer_list<R> values) {
    const R* prev = nullptr;
    for (const R& v : values) {
      if (prev) lt(*prev, v);
      prev = &v;
    }
  }

  template <std::size_t N>
  void chain(const std::array<R, N>& values) {
    for (std::size_t i = 1; i < N; ++i) lt(values[i - 1], values[i]);
  }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  const Check<R>& operator[](std::size_t i) const { return items_[i]; }
  void clear() { n_ = 0; }

 private:
  void push(Check<R> c) {
    if (n_ == capacity) throw std::length_error("CheckList capacity exceeded");
    items_[n_++] = c;
  }

  std::array<Check<R>, capacity> items_{};
  std::size_t n_ = 0;
};

template <Real R>
using Evaluator = std::function<void(R, CheckList<R>&)>;

// A claim instantiated at one parameter sample. The same generic callable is
// stored twice so the grid can be re-run in extended precision.
struct ClaimCase {
  std::string params;
  Evaluator<double> native;
  Evaluator<dd> extended;
};

template <class F>
ClaimCase make_case(std::string params, const F& f) {
  return {std::move(params), Evaluator<double>(f), Evaluator<dd>(f)};
}

enum class Expect { holds, fails };

constexpr std::string_view to_string(Expect e) { return e == Expect::holds ? "holds" : "fails"; }

enum class ClaimTag { lemma, theorem, corollary, proposition, remark, printed_variant, cross_check, probe };

constexpr std::string_view to_string(ClaimTag t) {
  switch (t) {
    case ClaimTag::lemma: return "lemma";
    case ClaimTag::theorem: return "theorem";
    case ClaimTag::corollary: return "corollary";
    case ClaimTag::proposition: return "proposition";
    case ClaimTag::remark: return "remark";
    case ClaimTag::printed_variant: return "printed_variant";
    case ClaimTag::cross_check: return "cross_check";
    case ClaimTag::probe: return "probe";
  }
  return "?";
}

struct Claim {
  std::string id;
  ClaimTag tag = ClaimTag::theorem;
  std::string statement;
  DomainKind domain = DomainKind::circular;
  Expect expect = Expect::holds;
  std::vector<ClaimCase> cases;
};

}  // namespace sincb::verifier
