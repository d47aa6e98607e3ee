#include "qmtilt/laumon.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmtilt/checked.hpp"

namespace qmtilt {

long long DegreeVector::total() const {
    long long s = 0;
    for (int e : entries) s = checked_add(s, e);
    return s;
}

bool DegreeVector::all_nonneg() const {
    return std::all_of(entries.begin(), entries.end(), [](int e) { return e >= 0; });
}

DegreeVector DegreeVector::operator+(const DegreeVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("degree size mismatch");
    DegreeVector r = *this;
    for (int i = 0; i < size(); ++i) r[i] += o[i];
    return r;
}

DegreeVector DegreeVector::operator-(const DegreeVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("degree size mismatch");
    DegreeVector r = *this;
    for (int i = 0; i < size(); ++i) r[i] -= o[i];
    return r;
}

std::string DegreeVector::str() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries[static_cast<size_t>(i)]);
    }
    return s;
}

Weight Weight::axis(int n, int i, Rat c) {
    Weight w = zero(n);
    if (i < 1 || i > n) throw std::invalid_argument("axis index out of range");
    w.a[static_cast<size_t>(i - 1)] = c;
    return w;
}

Weight Weight::eps_unit(int n, Rat c) {
    Weight w = zero(n);
    w.eps = c;
    return w;
}

bool Weight::is_zero() const {
    if (!eps.is_zero()) return false;
    return std::all_of(a.begin(), a.end(), [](const Rat& r) { return r.is_zero(); });
}

Weight Weight::operator+(const Weight& o) const {
    if (n() != o.n()) throw std::invalid_argument("weight size mismatch");
    Weight r = *this;
    for (int i = 0; i < n(); ++i) r.a[static_cast<size_t>(i)] += o.a[static_cast<size_t>(i)];
    r.eps += o.eps;
    return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& c : r.a) c = -c;
    r.eps = -r.eps;
    return r;
}

Rat Weight::specialize(const std::vector<int>& lambda) const {
    if (static_cast<int>(lambda.size()) != n())
        throw std::invalid_argument("lambda size mismatch");
    Rat s = eps;
    for (int i = 0; i < n(); ++i)
        s += a[static_cast<size_t>(i)] * Rat(lambda[static_cast<size_t>(i)]);
    return s;
}

std::string Weight::str() const {
    std::string s;
    auto append = [&s](const Rat& c, const std::string& sym) {
        if (c.is_zero()) return;
        std::string mag = (c.num() < 0 ? Rat(-c.num(), c.den()) : c).str();
        if (!s.empty()) s += c.num() < 0 ? "-" : "+";
        else if (c.num() < 0) s += "-";
        if (mag != "1") s += mag + "*";
        s += sym;
    };
    for (int i = 0; i < n(); ++i)
        append(a[static_cast<size_t>(i)], "a_" + std::to_string(i + 1));
    append(eps, "eps");
    return s.empty() ? "0" : s;
}

void TangentCharacter::add(const Weight& w, long long mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.emplace(w, mult);
    if (!inserted) {
        it->second = checked_add(it->second, mult);
        if (it->second == 0) terms_.erase(it);
    }
}

TangentCharacter& TangentCharacter::operator+=(const TangentCharacter& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
}

TangentCharacter& TangentCharacter::subtract(const TangentCharacter& o) {
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
}

long long TangentCharacter::signed_size() const {
    long long s = 0;
    for (const auto& [w, m] : terms_) s = checked_add(s, m);
    return s;
}

bool TangentCharacter::all_positive() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second > 0; });
}

long long TangentCharacter::multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

DegreeVector LaumonPoint::degree() const {
    DegreeVector d = DegreeVector::zeros(static_cast<int>(rows.size()));
    for (size_t k = 0; k < rows.size(); ++k)
        for (int e : rows[k]) d[static_cast<int>(k)] += e;
    return d;
}

void LaumonPoint::validate() const {
    const int m = n() - 1;
    if (static_cast<int>(rows.size()) != m)
        throw std::invalid_argument("laumon point: wrong number of rows");
    for (int k = 1; k <= m; ++k) {
        if (static_cast<int>(rows[static_cast<size_t>(k - 1)].size()) != k)
            throw std::invalid_argument("laumon point: row length mismatch");
        for (int i = 1; i <= k; ++i) {
            if (cell(k, i) < 0)
                throw std::invalid_argument("laumon point: negative entry");
            if (k < m && cell(k, i) < cell(k + 1, i))
                throw std::invalid_argument("laumon point: column monotonicity violated");
        }
    }
}

namespace {

// Fills rows top down; each row is generated in lexicographic order, so the
// flattened output is lexicographically ascending.
void fill_rows(int n, const Permutation& w, const DegreeVector& d, int k,
               std::vector<std::vector<int>>& rows, std::vector<LaumonPoint>* out,
               long long* count) {
    if (k == n - 1) {
        if (out) out->push_back(LaumonPoint{w, rows});
        if (count) *count = checked_add(*count, 1);
        return;
    }
    // next row has k+1 entries, entry i bounded by the row above for i <= k
    const std::vector<int>& prev = rows[static_cast<size_t>(k - 1)];
    std::vector<int> row(static_cast<size_t>(k) + 1, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == k) { // last entry is free
            row[static_cast<size_t>(i)] = rem;
            rows.push_back(row);
            fill_rows(n, w, d, k + 1, rows, out, count);
            rows.pop_back();
            return;
        }
        const int cap = std::min(prev[static_cast<size_t>(i)], rem);
        for (int x = 0; x <= cap; ++x) {
            row[static_cast<size_t>(i)] = x;
            self(self, i + 1, rem - x);
        }
    };
    if (d[k] >= 0) rec(rec, 0, d[k]);
}

void enumerate_impl(int n, const Permutation& w, const DegreeVector& d,
                    std::vector<LaumonPoint>* out, long long* count) {
    if (!d.all_nonneg()) return;
    if (d.size() != n - 1) throw std::invalid_argument("degree size must be n-1");
    if (n == 1) {
        if (out) out->push_back(LaumonPoint{w, {}});
        if (count) *count = checked_add(*count, 1);
        return;
    }
    std::vector<std::vector<int>> rows;
    rows.push_back({d[0]});
    fill_rows(n, w, d, 1, rows, out, count);
}

} // namespace

std::vector<LaumonPoint> enumerate_fixed_points(int n, const Permutation& w, const DegreeVector& d) {
    if (w.n() != n) throw std::invalid_argument("permutation rank mismatch");
    std::vector<LaumonPoint> out;
    enumerate_impl(n, w, d, &out, nullptr);
    return out;
}

long long count_v(int n, const DegreeVector& d) {
    long long count = 0;
    enumerate_impl(n, Permutation::identity(n), d, nullptr, &count);
    return count;
}

long long kostant_partition(int n, const DegreeVector& d) {
    if (d.size() != n - 1) throw std::invalid_argument("degree size must be n-1");
    if (!d.all_nonneg()) return 0;

    // positive roots e_p - e_q = alpha_p + ... + alpha_{q-1}, p < q
    std::vector<std::pair<int, int>> roots; // [lo, hi) range of simple roots, 0-based
    for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) roots.emplace_back(p, q);

    std::vector<int> rem = d.entries;
    auto rec = [&](auto&& self, size_t idx) -> long long {
        if (idx == roots.size())
            return std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; }) ? 1 : 0;
        const auto [lo, hi] = roots[idx];
        int cap = rem[static_cast<size_t>(lo)];
        for (int i = lo; i < hi; ++i) cap = std::min(cap, rem[static_cast<size_t>(i)]);
        long long total = 0;
        for (int c = 0; c <= cap; ++c) {
            if (c > 0)
                for (int i = lo; i < hi; ++i) --rem[static_cast<size_t>(i)];
            total = checked_add(total, self(self, idx + 1));
        }
        for (int i = lo; i < hi; ++i) rem[static_cast<size_t>(i)] += cap;
        return total;
    };
    return rec(rec, 0);
}

TangentCharacter chi_hom(const Weight& mu, int c, const Weight& nu, int d, bool twist_at_infinity) {
    const int e = c - d;
    const Weight base = nu - mu;
    int lo, hi;
    long long mult;
    if (twist_at_infinity) {
        if (e >= 0) { lo = 1; hi = e; mult = 1; }
        else { lo = e + 1; hi = 0; mult = -1; }
    } else {
        if (e >= 0) { lo = 0; hi = e; mult = 1; }
        else if (e == -1) { lo = 1; hi = 0; mult = 1; } // empty
        else { lo = e + 1; hi = -1; mult = -1; }
    }
    TangentCharacter out;
    for (int k = lo; k <= hi; ++k)
        out.add(base + Weight::eps_unit(base.n(), Rat(k)), mult);
    return out;
}

TangentCharacter tangent_character(const LaumonPoint& p) {
    p.validate();
    const int n = p.n();
    const Permutation& w = p.w;

    // row k for k <= n-1 is the point's k-th row; row n is the trivial flag
    auto row_entry = [&](int k, int i) -> std::pair<Weight, int> {
        if (k == n) return {Weight::axis(n, w(i)), 0};
        return {Weight::axis(n, w(i)), p.cell(k, i)};
    };

    TangentCharacter chi;
    for (int k = 1; k <= n - 1; ++k) {
        for (int i = 1; i <= k; ++i) {
            const auto [mu, c] = row_entry(k, i);
            for (int j = 1; j <= k + 1; ++j) {
                const auto [nu, d] = row_entry(k + 1, j);
                chi += chi_hom(mu, c, nu, d, true);
            }
            for (int j = 1; j <= k; ++j) {
                const auto [nu, d] = row_entry(k, j);
                chi.subtract(chi_hom(mu, c, nu, d, true));
            }
        }
    }
    if (!chi.all_positive())
        throw std::logic_error("tangent character has a negative multiplicity after cancellation");
    return chi;
}

Weight f_weight(const LaumonPoint& p, int k) {
    if (k < 1 || k > p.n() - 1) throw std::invalid_argument("f_weight index out of range");
    Weight out = Weight::zero(p.n());
    long long row_sum = 0;
    for (int i = 1; i <= k; ++i) {
        out = out + Weight::axis(p.n(), p.w(i));
        row_sum += p.cell(k, i);
    }
    return out + Weight::eps_unit(p.n(), Rat(-row_sum));
}

} // namespace qmtilt
