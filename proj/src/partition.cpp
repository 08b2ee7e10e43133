#include "jackal/partition.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jackal {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> out(empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[j];
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::string Partition::str() const {
    if (empty()) return "-";
    std::string s;
    for (int i = 0; i < length(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t == "-") return Partition();
    std::vector<int> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition syntax: '" + text + "'");
        parts.push_back(std::stoi(item));
    }
    if (t.back() == ',') throw std::invalid_argument("bad partition syntax: '" + text + "'");
    return Partition(std::move(parts));
}

bool revlex_less(const Partition& a, const Partition& b) { return a.parts() > b.parts(); }

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew shape " + outer.str() + "/" + inner.str() +
                                    ": inner partition not contained in outer");
}

std::string SkewShape::str() const {
    return inner.empty() ? outer.str() : outer.str() + "/" + inner.str();
}

SkewShape SkewShape::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(Partition::parse(text), Partition());
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
}

std::vector<int> Chain::weight() const {
    std::vector<int> w;
    for (std::size_t i = 1; i < steps.size(); ++i)
        w.push_back(steps[i].size() - steps[i - 1].size());
    return w;
}

namespace {
void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

namespace {
void gen_subpartitions(const Partition& lam, int row, int prev, std::vector<int>& cur,
                       std::vector<Partition>& out) {
    out.push_back(Partition(cur));
    if (row > lam.length()) return;
    int hi = std::min(prev, lam.part(row));
    for (int v = hi; v >= 1; --v) {
        cur.push_back(v);
        gen_subpartitions(lam, row + 1, v, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_subpartitions(lambda, 1, lambda.empty() ? 0 : lambda.part(1), cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return revlex_less(a, b);
    });
    return out;
}

bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("dominance comparison requires equal sizes");
    int sl = 0, sm = 0;
    for (int i = 1; i <= std::max(lam.length(), mu.length()); ++i) {
        sl += lam.part(i);
        sm += mu.part(i);
        if (sl < sm) return false;
    }
    return true;
}

std::pair<int, int> arm_leg(const Partition& lam, const Box& s) {
    if (s.row < 1 || s.col < 1 || s.col > lam.part(s.row))
        throw std::invalid_argument("box outside the diagram");
    int arm = lam.part(s.row) - s.col;
    int leg = 0;
    for (int i = s.row + 1; i <= lam.length() && lam.part(i) >= s.col; ++i) ++leg;
    return {arm, leg};
}

Partition combine(const Partition& a, const Partition& b, CombineMode mode) {
    std::vector<int> parts;
    if (mode == CombineMode::set_union) {
        parts = a.parts();
        parts.insert(parts.end(), b.parts().begin(), b.parts().end());
        std::sort(parts.rbegin(), parts.rend());
    } else {
        for (int i = 1; i <= std::max(a.length(), b.length()); ++i)
            parts.push_back(a.part(i) + b.part(i));
    }
    return Partition(std::move(parts));
}

PartitionStats stats(const Partition& lam) {
    PartitionStats st{lam.length(), 1, 1};
    int run = 0, prev = 0;
    auto flush = [&st](int value, int count) {
        for (int i = 1; i <= count; ++i) st.u *= i;
        for (int i = 0; i < count; ++i) st.zee *= value;
    };
    for (int p : lam.parts()) {
        if (p == prev) {
            ++run;
        } else {
            flush(prev, run);
            prev = p;
            run = 1;
        }
    }
    flush(prev, run);
    st.zee *= st.u;
    return st;
}

bool is_horizontal_strip(const SkewShape& shape) {
    for (int i = 1; i < shape.outer.length(); ++i)
        if (shape.outer.part(i + 1) > shape.inner.part(i)) return false;
    return true;
}

Partition rotated_complement(const Partition& pi, int b, int h) {
    if (b < 0 || h < 0) throw std::invalid_argument("negative rectangle");
    if (pi.length() > h || pi.part(1) > b)
        throw std::invalid_argument("partition does not fit in the rectangle");
    std::vector<int> parts;
    for (int k = 1; k <= h; ++k) parts.push_back(b - pi.part(h + 1 - k));
    return Partition(std::move(parts));
}

Partition translate_partition(const Partition& pi, int rows_removed, int cols_removed) {
    std::vector<int> parts;
    for (int k = 1;; ++k) {
        int v = pi.part(rows_removed + k) - cols_removed;
        if (v <= 0) break;
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

Translation translate_minimal(const SkewShape& shape) {
    const Partition &lam = shape.outer, &mu = shape.inner;
    int i0 = 0;
    while (i0 < mu.length() && mu.part(i0 + 1) == lam.part(i0 + 1)) ++i0;
    Partition lamc = lam.conjugate(), muc = mu.conjugate();
    int j0 = 0;
    while (j0 < muc.length() && muc.part(j0 + 1) == lamc.part(j0 + 1)) ++j0;
    Translation t;
    t.rows_removed = i0;
    t.cols_removed = j0;
    t.shape = SkewShape(translate_partition(lam, i0, j0), translate_partition(mu, i0, j0));
    return t;
}

namespace {
// Partitions nxt with cur <= nxt <= outer, |nxt| = |cur| + remaining, and
// nxt/cur a horizontal strip. Rows are fixed top-down; the strip condition
// nxt_{i} <= cur_{i-1} also keeps nxt weakly decreasing.
void strip_extensions(const Partition& cur, const Partition& outer, int row, int remaining,
                      std::vector<int>& parts, std::vector<Partition>& out) {
    if (remaining == 0) {
        std::vector<int> full = parts;
        for (int i = row; i <= cur.length(); ++i) full.push_back(cur.part(i));
        out.push_back(Partition(std::move(full)));
        return;
    }
    if (row > outer.length()) return;
    int lo = cur.part(row);
    int hi = std::min(outer.part(row), row == 1 ? outer.part(1) : cur.part(row - 1));
    hi = std::min(hi, lo + remaining);
    for (int v = hi; v >= std::max(lo, 1); --v) {
        parts.push_back(v);
        strip_extensions(cur, outer, row + 1, remaining - (v - lo), parts, out);
        parts.pop_back();
    }
    // Leaving this row at zero forces all later rows to zero, which strands
    // the remaining boxes; no further branch.
}

void chain_dfs(const SkewShape& shape, std::span<const int> weight, std::size_t idx,
               const Partition& cur, std::vector<Partition>& steps, std::vector<Chain>& out) {
    if (idx == weight.size()) {
        if (cur == shape.outer) out.push_back(Chain{steps});
        return;
    }
    std::vector<Partition> exts;
    std::vector<int> parts;
    strip_extensions(cur, shape.outer, 1, weight[idx], parts, exts);
    for (const Partition& nxt : exts) {
        steps.push_back(nxt);
        chain_dfs(shape, weight, idx + 1, nxt, steps, out);
        steps.pop_back();
    }
}
}  // namespace

std::vector<Chain> standard_chains(const SkewShape& shape, std::span<const int> weight) {
    int total = 0;
    for (int w : weight) {
        if (w <= 0) throw std::invalid_argument("chain weights must be positive");
        total += w;
    }
    if (total != shape.size()) return {};
    std::vector<Chain> out;
    std::vector<Partition> steps{shape.inner};
    chain_dfs(shape, weight, 0, shape.inner, steps, out);
    return out;
}

MaxFilling max_filling_weight(const SkewShape& shape) {
    const Partition &lam = shape.outer, &mu = shape.inner;
    Partition lamc = lam.conjugate(), muc = mu.conjugate();
    MaxFilling mf;
    int width = lam.part(1);
    for (int j = 1; j <= width; ++j) mf.c.push_back(lamc.part(j) - muc.part(j));
    for (int i = 1; i <= lam.length(); ++i)
        mf.r.push_back(lam.part(i) > mu.part(i) ? i - muc.part(lam.part(i)) : 0);
    int cmax = 0;
    for (int v : mf.c) cmax = std::max(cmax, v);
    std::vector<int> nu0;
    for (int k = 1; k <= cmax; ++k) {
        int cnt = 0;
        for (int v : mf.c)
            if (v >= k) ++cnt;
        nu0.push_back(cnt);
    }
    mf.nu0 = Partition(std::move(nu0));
    return mf;
}

Configuration::Configuration(std::vector<Box> b) : boxes(std::move(b)) {
    std::sort(boxes.begin(), boxes.end());
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (boxes[i].row < 1 || boxes[i].col < 1)
            throw std::invalid_argument("configuration boxes must lie in the positive quadrant");
        if (i > 0 && boxes[i] == boxes[i - 1])
            throw std::invalid_argument("duplicate box in configuration");
    }
}

Configuration Configuration::from_partition(const Partition& pi) {
    std::vector<Box> b;
    for (int i = 1; i <= pi.length(); ++i)
        for (int j = 1; j <= pi.part(i); ++j) b.push_back({i, j});
    return Configuration(std::move(b));
}

namespace {
Partition profile(const std::vector<Box>& boxes, bool by_row) {
    std::map<int, int> cnt;
    for (const Box& b : boxes) ++cnt[by_row ? b.row : b.col];
    std::vector<int> parts;
    for (auto& [k, v] : cnt) parts.push_back(v);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}
}  // namespace

Partition Configuration::rho() const { return profile(boxes, true); }
Partition Configuration::gamma() const { return profile(boxes, false); }

bool Configuration::fits(const Partition& bound) const {
    for (const Box& b : boxes)
        if (b.col > bound.part(b.row)) return false;
    return true;
}

std::string Configuration::str() const {
    std::string s;
    for (const Box& b : boxes)
        s += "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
    return s.empty() ? "()" : s;
}

namespace {
bool strictly_dominated(const Partition& now, const Partition& before) {
    return now != before && dominates(before, now);
}
}  // namespace

std::vector<Configuration> admissible_configs(const Partition& mu, const Partition& bound) {
    const int k = mu.size();
    if (k == 0) return {Configuration()};

    // Reachable classes: slide one box at a time in a free (k+1)-square grid
    // and canonicalize after each move. A class of k boxes occupies at most k
    // rows and k columns, so one spare row and column covers every move up to
    // the permutations that canonicalization absorbs.
    Configuration start = config_canonical(Configuration::from_partition(mu));
    std::set<Configuration> classes{start};
    std::deque<Configuration> queue{start};
    const int grid = k + 1;
    while (!queue.empty()) {
        Configuration c = queue.front();
        queue.pop_front();
        std::set<Box> occupied(c.boxes.begin(), c.boxes.end());
        Partition rho = c.rho(), gamma = c.gamma();
        for (std::size_t i = 0; i < c.boxes.size(); ++i) {
            Box b = c.boxes[i];
            for (int c2 = 1; c2 <= grid; ++c2) {  // along the row
                if (c2 == b.col || occupied.count({b.row, c2})) continue;
                std::vector<Box> nb = c.boxes;
                nb[i] = {b.row, c2};
                Configuration cand(std::move(nb));
                if (!strictly_dominated(cand.gamma(), gamma)) continue;
                Configuration canon = config_canonical(cand);
                if (classes.insert(canon).second) queue.push_back(canon);
            }
            for (int r2 = 1; r2 <= grid; ++r2) {  // along the column
                if (r2 == b.row || occupied.count({r2, b.col})) continue;
                std::vector<Box> nb = c.boxes;
                nb[i] = {r2, b.col};
                Configuration cand(std::move(nb));
                if (!strictly_dominated(cand.rho(), rho)) continue;
                Configuration canon = config_canonical(cand);
                if (classes.insert(canon).second) queue.push_back(canon);
            }
        }
    }

    // Placements: k-subsets of bound's diagram whose class is reachable.
    std::vector<Box> cells;
    for (int r = 1; r <= bound.length(); ++r)
        for (int c = 1; c <= bound.part(r); ++c) cells.push_back({r, c});
    const int m = static_cast<int>(cells.size());
    if (m < k) return {};
    std::vector<Configuration> out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<Box> sel;
        sel.reserve(k);
        for (int i : idx) sel.push_back(cells[i]);
        Configuration cand(std::move(sel));
        if (classes.count(config_canonical(cand))) out.push_back(std::move(cand));
        int j = k - 1;
        while (j >= 0 && idx[j] == m - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Configuration config_canonical(const Configuration& conf) {
    if (conf.boxes.empty()) return conf;
    std::vector<int> rows, cols;
    for (const Box& b : conf.boxes) {
        rows.push_back(b.row);
        cols.push_back(b.col);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::size_t p = rows.size(), q = cols.size();

    // compacted incidence matrix
    std::vector<std::vector<uint8_t>> m(p, std::vector<uint8_t>(q, 0));
    for (const Box& b : conf.boxes) {
        std::size_t i = std::lower_bound(rows.begin(), rows.end(), b.row) - rows.begin();
        std::size_t j = std::lower_bound(cols.begin(), cols.end(), b.col) - cols.begin();
        m[i][j] = 1;
    }

    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint8_t> best;
    do {
        std::vector<std::vector<uint8_t>> colvecs(q, std::vector<uint8_t>(p));
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t i = 0; i < p; ++i) colvecs[j][i] = m[perm[i]][j];
        std::sort(colvecs.begin(), colvecs.end(), std::greater<>());
        std::vector<uint8_t> flat;
        flat.reserve(p * q);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < q; ++j) flat.push_back(colvecs[j][i]);
        if (best.empty() || flat < best) best = std::move(flat);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Box> out;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (best[i * q + j]) out.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
    return Configuration(std::move(out));
}

}  // namespace jackal
