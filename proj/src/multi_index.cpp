#include "shimorin/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "shimorin/errors.hpp"

namespace shimorin {

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    if (e_.empty()) throw ValidationError("multi-index needs at least one variable");
    for (int x : e_)
        if (x < 0) throw ValidationError("negative exponent in multi-index");
    degree_ = std::accumulate(e_.begin(), e_.end(), 0);
}

MultiIndex MultiIndex::unit(int g, int j) {
    std::vector<int> e(g, 0);
    e.at(j) = 1;
    return MultiIndex(std::move(e));
}

bool MultiIndex::leq(const MultiIndex& b) const {
    for (std::size_t j = 0; j < e_.size(); ++j)
        if (e_[j] > b.e_[j]) return false;
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& b) const {
    std::vector<int> r(e_);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += b.e_[j];
    return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::operator-(const MultiIndex& b) const {
    std::vector<int> r(e_);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= b.e_[j];
    return MultiIndex(std::move(r));
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (std::size_t j = 0; j < e_.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(e_[j]);
    }
    return s + ")";
}

bool graded_less(const MultiIndex& a, const MultiIndex& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
}

namespace {

// all compositions of n into g parts, lexicographically increasing
void compositions(int g, int n, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    int j = static_cast<int>(cur.size());
    if (j == g - 1) {
        cur.push_back(n);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= n; ++x) {
        cur.push_back(x);
        compositions(g, n - x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> indices_up_to(int g, int n) {
    if (g < 1) throw ValidationError("variable count must be positive");
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    for (int deg = 0; deg <= n; ++deg) compositions(g, deg, cur, out);
    return out;
}

std::vector<MultiIndex> indices_below(const MultiIndex& d) {
    int g = d.variables();
    std::vector<MultiIndex> out;
    std::vector<int> cur(g, 0);
    while (true) {
        out.emplace_back(cur);
        int j = g - 1;
        while (j >= 0 && cur[j] == d[j]) cur[j--] = 0;
        if (j < 0) break;
        ++cur[j];
    }
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

CoInvariantSet enumerate_coinvariant(int g, int d) {
    if (d < 0) throw ValidationError("degree must be nonnegative");
    CoInvariantSet F;
    F.variables = g;
    for (auto& a : indices_up_to(g, d)) F.indices.insert(a);
    return F;
}

CoInvariantCheck validate_coinvariant(int g, const IndexSet& F) {
    CoInvariantCheck r;
    auto zero = MultiIndex::zero(g);
    if (!F.count(zero)) return {false, zero};
    for (auto& b : F) {
        if (b.variables() != g) throw ValidationError("index " + b.str() + " has wrong variable count");
        for (auto& a : indices_below(b))
            if (!F.count(a) && (!r.witness || graded_less(a, *r.witness))) r.witness = a;
    }
    r.valid = !r.witness;
    return r;
}

}  // namespace shimorin
