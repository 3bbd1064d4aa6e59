#include "bandposet/posemigroup.hpp"

#include <sstream>

namespace bandposet {

bool LemmaReport::all_passed() const {
  for (const auto& c : clauses) {
    if (!c.passed) return false;
  }
  return true;
}

std::string LemmaReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : clauses) {
    os << (c.passed ? "PASS " : "FAIL ") << c.clause;
    if (!c.passed) os << " -- " << c.witness;
    os << '\n';
  }
  return os.str();
}

namespace {

// Decreasing subsets are checked exhaustively up to this size, principal
// down-sets only beyond it.
constexpr unsigned kAllDownSetsLimit = 14;

class ClauseRecorder {
 public:
  explicit ClauseRecorder(std::string name) { result_.clause = std::move(name); }

  template <typename... Args>
  void fail(const Args&... parts) {
    if (!result_.passed) return;
    std::ostringstream os;
    (os << ... << parts);
    result_.passed = false;
    result_.witness = os.str();
  }
  bool failed() const { return !result_.passed; }
  ClauseResult take() { return std::move(result_); }

 private:
  ClauseResult result_;
};

bool closed_under(const BandOp& op, ElementSet s) {
  for (Element a : s) {
    for (Element b : s) {
      if (!s.contains(op(a, b))) return false;
    }
  }
  return true;
}

}  // namespace

LemmaReport posemigroup_lemma_report(const BandOp& op, const Poset& p) {
  if (!is_admissible(op, p)) {
    throw InputError("lemma report needs an admissible operation");
  }
  if (auto v = check_rrb(op); !v) {
    throw InputError("lemma report needs a right-regular band: " + v.describe());
  }
  const unsigned n = p.size();
  LemmaReport report;

  {
    ClauseRecorder r("a·b <= b, and a·b = b when b is minimal");
    for (Element a = 0; a < n && !r.failed(); ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!p.leq(op(a, b), b) || (p.is_minimal(b) && op(a, b) != b)) {
          r.fail("a=", a, " b=", b, " a·b=", op(a, b));
          break;
        }
      }
    }
    report.clauses.push_back(r.take());
  }
  {
    ClauseRecorder r("a·b·a = b·a");
    for (Element a = 0; a < n && !r.failed(); ++a) {
      for (Element b = 0; b < n; ++b) {
        if (op(op(a, b), a) != op(b, a) || op(a, op(b, a)) != op(b, a)) {
          r.fail("a=", a, " b=", b);
          break;
        }
      }
    }
    report.clauses.push_back(r.take());
  }
  {
    ClauseRecorder r("a <= b implies b·a = a");
    for (Element a = 0; a < n; ++a) {
      for (Element b : p.up(a)) {
        if (op(b, a) != a) r.fail("a=", a, " b=", b);
      }
    }
    report.clauses.push_back(r.take());
  }
  {
    ClauseRecorder r("decreasing subsets are closed under the operation");
    if (n <= kAllDownSetsLimit) {
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t bits = 1; bits < limit && !r.failed(); ++bits) {
        const ElementSet s(bits);
        if (p.is_decreasing(s) && !closed_under(op, s)) {
          r.fail("down-set bits=", bits);
        }
      }
    } else {
      for (Element x = 0; x < n; ++x) {
        if (!closed_under(op, p.down(x))) r.fail("principal down-set of ", x);
      }
    }
    report.clauses.push_back(r.take());
  }
  {
    ClauseRecorder r("a <= b implies a·x <= b·x");
    for (Element a = 0; a < n; ++a) {
      for (Element b : p.up(a)) {
        for (Element x = 0; x < n; ++x) {
          if (!p.leq(op(a, x), op(b, x))) r.fail("a=", a, " b=", b, " x=", x);
        }
      }
    }
    report.clauses.push_back(r.take());
  }
  {
    ClauseRecorder r(
        "c <= x, y implies c <= x·y and c <= y·x; commuting products are "
        "infima");
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        const auto lower = p.common_lower_bounds(x, y);
        if (!lower.subset_of(p.down(op(x, y))) ||
            !lower.subset_of(p.down(op(y, x)))) {
          r.fail("x=", x, " y=", y);
        }
        if (op(x, y) == op(y, x) && meet(p, x, y) != op(x, y)) {
          r.fail("x=", x, " y=", y, " x·y=y·x is not the infimum");
        }
      }
    }
    report.clauses.push_back(r.take());
  }
  {
    ClauseRecorder r(
        "x·y = y implies a -> a·y is an isomorphism (y·x)↓ -> y↓ with "
        "inverse b -> b·x");
    for (Element x = 0; x < n && !r.failed(); ++x) {
      for (Element y = 0; y < n && !r.failed(); ++y) {
        if (op(x, y) != y) continue;
        const auto source = p.down(op(y, x));
        const auto target = p.down(y);
        for (Element a : source) {
          if (!target.contains(op(a, y)) || op(op(a, y), x) != a) {
            r.fail("x=", x, " y=", y, " a=", a);
          }
        }
        for (Element b : target) {
          if (!source.contains(op(b, x)) || op(op(b, x), y) != b) {
            r.fail("x=", x, " y=", y, " b=", b);
          }
        }
        for (Element a : source) {
          for (Element b : source) {
            if (op(op(a, b), y) != op(op(a, y), op(b, y))) {
              r.fail("x=", x, " y=", y, " products of ", a, ", ", b);
            }
          }
        }
      }
    }
    report.clauses.push_back(r.take());
  }
  {
    ClauseRecorder r("(x·y)↓ is isomorphic to (y·x)↓");
    for (Element x = 0; x < n && !r.failed(); ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (!are_isomorphic(p.induced(p.down(op(x, y))),
                            p.induced(p.down(op(y, x))))) {
          r.fail("x=", x, " y=", y);
          break;
        }
      }
    }
    report.clauses.push_back(r.take());
  }
  {
    ClauseRecorder r("m minimal implies m·x <= x and m·x minimal");
    for (Element m : p.minimals()) {
      for (Element x = 0; x < n; ++x) {
        if (!p.leq(op(m, x), x) || !p.is_minimal(op(m, x))) {
          r.fail("m=", m, " x=", x);
        }
      }
    }
    report.clauses.push_back(r.take());
  }
  return report;
}

}  // namespace bandposet
