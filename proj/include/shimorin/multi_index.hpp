#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace shimorin {

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exponents);

    static MultiIndex zero(int g) { return MultiIndex(std::vector<int>(g, 0)); }
    static MultiIndex unit(int g, int j);
    static MultiIndex scalar(int n) { return MultiIndex(std::vector<int>{n}); }

    int variables() const { return static_cast<int>(e_.size()); }
    int degree() const { return degree_; }
    int operator[](int j) const { return e_[j]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_zero() const { return degree_ == 0; }

    // coordinatewise partial order
    bool leq(const MultiIndex& b) const;

    MultiIndex operator+(const MultiIndex& b) const;
    // requires b <= *this
    MultiIndex operator-(const MultiIndex& b) const;

    bool operator==(const MultiIndex& b) const { return e_ == b.e_; }
    bool operator!=(const MultiIndex& b) const { return e_ != b.e_; }

    std::string str() const;

private:
    std::vector<int> e_;
    int degree_ = 0;
};

// graded lexicographic: lower total degree first, then smaller leftmost differing coordinate
bool graded_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return graded_less(a, b); }
};

using IndexSet = std::set<MultiIndex, GradedLess>;

// every a in N^g with |a| <= n, in graded order
std::vector<MultiIndex> indices_up_to(int g, int n);
// every a <= d, in graded order
std::vector<MultiIndex> indices_below(const MultiIndex& d);

struct CoInvariantSet {
    int variables = 1;
    IndexSet indices;
};

CoInvariantSet enumerate_coinvariant(int g, int d);

struct CoInvariantCheck {
    bool valid = true;
    std::optional<MultiIndex> witness;  // smallest missing index
};

CoInvariantCheck validate_coinvariant(int g, const IndexSet& F);

}  // namespace shimorin
