#include "qmtilt/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qmtilt/checked.hpp"

namespace qmtilt {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative rank");
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::parse(const std::string& one_line) {
    std::vector<int> img;
    std::stringstream ss(one_line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad permutation string: " + one_line);
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("bad permutation string: " + one_line);
        img.push_back(v);
    }
    if (img.empty()) throw std::invalid_argument("empty permutation string");
    return Permutation(std::move(img));
}

int Permutation::position_of(int value) const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)(i) == value) return i;
    throw std::invalid_argument("value out of range");
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= n(); ++i) inv[static_cast<size_t>((*this)(i)-1)] = i;
    Permutation p;
    p.img_ = std::move(inv);
    return p;
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (n() != rhs.n()) throw std::invalid_argument("rank mismatch in compose");
    std::vector<int> img(img_.size());
    for (int i = 1; i <= n(); ++i) img[static_cast<size_t>(i - 1)] = (*this)(rhs(i));
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::swap_values(int a, int b) const {
    std::vector<int> img = img_;
    for (int& v : img) {
        if (v == a) v = b;
        else if (v == b) v = a;
    }
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s;
    for (int i = 1; i <= n(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string((*this)(i));
    }
    return s;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Permutation longest_element(int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(img));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw std::invalid_argument("rank mismatch in bruhat_leq");
    const int n = u.n();
    std::vector<int> us, ws;
    us.reserve(static_cast<size_t>(n));
    ws.reserve(static_cast<size_t>(n));
    for (int k = 1; k < n; ++k) {
        us.push_back(u(k));
        ws.push_back(w(k));
        std::vector<int> a = us, b = ws;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (int i = 0; i < k; ++i)
            if (a[static_cast<size_t>(i)] > b[static_cast<size_t>(i)]) return false;
    }
    return true;
}

std::vector<BruhatEdge> bruhat_edges(const Permutation& w, EdgeMode mode) {
    const int n = w.n();
    std::vector<BruhatEdge> out;
    for (int h = 1; h < n; ++h) {
        if (mode == EdgeMode::SimpleOnly && h > 1) break;
        for (int a = 1; a + h <= n; ++a) {
            const int b = a + h;
            // length increases iff a sits left of b in the one-line word
            if (w.position_of(a) < w.position_of(b))
                out.push_back(BruhatEdge{w, {a, b}, w.swap_values(a, b)});
        }
    }
    return out;
}

long long path_count(const Permutation& w, const Permutation& u, EdgeMode mode) {
    if (w.n() != u.n()) throw std::invalid_argument("rank mismatch in path_count");
    std::map<Permutation, long long> memo;
    const int target_len = u.length();

    auto rec = [&](auto&& self, const Permutation& x) -> long long {
        if (x == u) return 1;
        if (x.length() >= target_len) return 0;
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        long long total = 0;
        for (const auto& e : bruhat_edges(x, mode))
            total = checked_add(total, self(self, e.target));
        memo.emplace(x, total);
        return total;
    };
    return rec(rec, w);
}

std::map<Permutation, long long> path_counts_from(const Permutation& w, EdgeMode mode) {
    // forward sweep in length order; every edge target is longer than its source
    auto perms = all_permutations(w.n());
    std::sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
        const int la = a.length(), lb = b.length();
        return la != lb ? la < lb : a < b;
    });
    std::map<Permutation, long long> counts;
    for (const auto& p : perms) counts[p] = 0;
    counts[w] = 1;
    for (const auto& x : perms) {
        const long long c = counts[x];
        if (c == 0) continue;
        for (const auto& e : bruhat_edges(x, mode))
            counts[e.target] = checked_add(counts[e.target], c);
    }
    return counts;
}

} // namespace qmtilt
