#include "hwz/sym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hwz {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntPartition IntPartition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) throw std::invalid_argument("empty part in partition '" + text + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid partition '" + text + "'");
        }
        if (used != item.size() || v < 1) throw std::invalid_argument("invalid partition '" + text + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    return IntPartition(std::move(parts));
}

IntPartition IntPartition::ones(int n) { return IntPartition(std::vector<int>(n, 1)); }

std::map<int, int> IntPartition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::uint64_t IntPartition::z() const {
    std::uint64_t z = 1;
    for (auto [part, mult] : multiplicities()) {
        z *= factorial(mult);
        for (int k = 0; k < mult; ++k) z *= static_cast<std::uint64_t>(part);
    }
    return z;
}

std::uint64_t IntPartition::class_size() const { return factorial(n_) / z(); }

std::string IntPartition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::strong_ordering IntPartition::operator<=>(const IntPartition& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    // larger leading parts come first
    for (std::size_t i = 0; i < std::min(parts_.size(), other.parts_.size()); ++i) {
        if (parts_[i] != other.parts_[i]) return other.parts_[i] <=> parts_[i];
    }
    return parts_.size() <=> other.parts_.size();
}

void for_each_partition(int n, const std::function<void(const IntPartition&)>& visit) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            visit(IntPartition(cur));
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
}

std::vector<IntPartition> partitions_of(int n) {
    std::vector<IntPartition> out;
    for_each_partition(n, [&](const IntPartition& p) { out.push_back(p); });
    return out;
}

// --- Permutation ---

Permutation::Permutation(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    if (n > 255) throw std::invalid_argument("permutation too large");
    img_.resize(n);
    std::vector<bool> hit(n, false);
    for (int k = 0; k < n; ++k) {
        int v = images[k];
        if (v < 1 || v > n || hit[v - 1]) throw std::invalid_argument("images do not form a permutation");
        hit[v - 1] = true;
        img_[k] = static_cast<std::uint8_t>(v - 1);
    }
}

Permutation Permutation::from_raw(std::vector<std::uint8_t> img) {
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::identity(int n) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    return from_raw(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw std::invalid_argument("invalid transposition");
    auto p = identity(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(n + 1, false);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int x = cyc[i];
            if (x < 1 || x > n || used[x]) throw std::invalid_argument("invalid cycle notation");
            used[x] = true;
            images[x - 1] = cyc[(i + 1) % cyc.size()];
        }
    }
    return Permutation(images);
}

Permutation Permutation::canonical(const IntPartition& mu) {
    std::vector<std::uint8_t> img(mu.size());
    int start = 0;
    for (int part : mu.parts()) {
        for (int i = 0; i < part; ++i) img[start + i] = static_cast<std::uint8_t>(start + (i + 1) % part);
        start += part;
    }
    return from_raw(std::move(img));
}

Permutation Permutation::full_cycle(int n) {
    if (n == 0) return identity(0);
    return canonical(IntPartition(std::vector<int>{n}));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    auto pr = p.raw();
    auto qr = q.raw();
    std::vector<std::uint8_t> img(pr.size());
    for (std::size_t k = 0; k < img.size(); ++k) img[k] = pr[qr[k]];
    return Permutation::from_raw(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint8_t> inv(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) inv[img_[k]] = static_cast<std::uint8_t>(k);
    return from_raw(std::move(inv));
}

int Permutation::num_cycles() const {
    const int n = size();
    std::vector<bool> seen(n, false);
    int c = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++c;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = true;
    }
    return c;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int n = size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        out.emplace_back();
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            out.back().push_back(j + 1);
        }
    }
    return out;
}

IntPartition Permutation::cycle_type() const {
    std::vector<int> parts;
    for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
    return IntPartition(std::move(parts));
}

bool Permutation::is_identity() const {
    for (std::size_t k = 0; k < img_.size(); ++k)
        if (img_[k] != k) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string s;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        s += "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(c[i]);
        }
        s += ")";
    }
    return s.empty() ? "id" : s;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    do {
        out.push_back(Permutation::from_raw(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// --- Transposition ---

Transposition::Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y || a < 1) throw std::invalid_argument("invalid transposition");
}

Permutation Transposition::as_permutation(int n) const { return Permutation::transposition(n, a, b); }

std::string Transposition::to_string() const { return "(" + std::to_string(a) + " " + std::to_string(b) + ")"; }

// --- SetPartition ---

SetPartition::SetPartition(const std::vector<int>& labels) : labels_(labels.size()) {
    std::map<int, int> relabel;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        auto [it, fresh] = relabel.try_emplace(labels[k], static_cast<int>(relabel.size()));
        labels_[k] = it->second;
    }
    blocks_ = static_cast<int>(relabel.size());
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> labels(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("empty block");
        for (int x : blocks[b]) {
            if (x < 1 || x > n || labels[x - 1] != -1) throw std::invalid_argument("blocks are not a partition");
            labels[x - 1] = static_cast<int>(b);
        }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end())
        throw std::invalid_argument("blocks do not cover [n]");
    return SetPartition(labels);
}

SetPartition SetPartition::finest(int n) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return SetPartition(labels);
}

SetPartition SetPartition::coarsest(int n) { return SetPartition(std::vector<int>(n, 0)); }

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (std::size_t k = 0; k < labels_.size(); ++k) out[labels_[k]].push_back(static_cast<int>(k) + 1);
    return out;
}

bool SetPartition::refines(const SetPartition& other) const {
    if (size() != other.size()) throw std::invalid_argument("refines: size mismatch");
    std::vector<int> image(blocks_, -1);
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        int& slot = image[labels_[k]];
        if (slot == -1)
            slot = other.labels_[k];
        else if (slot != other.labels_[k])
            return false;
    }
    return true;
}

std::string SetPartition::to_string() const {
    std::string s = "{";
    auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
        if (b) s += ",";
        s += "{";
        for (std::size_t i = 0; i < bs[b].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(bs[b][i]);
        }
        s += "}";
    }
    return s + "}";
}

SetPartition orbit_partition(std::span<const Permutation> gens, int n) {
    UnionFind uf(n);
    for (const auto& g : gens) {
        if (g.size() != n) throw std::invalid_argument("orbit_partition: size mismatch");
        auto r = g.raw();
        for (int k = 0; k < n; ++k) uf.unite(k, r[k]);
    }
    std::vector<int> labels(n);
    for (int k = 0; k < n; ++k) labels[k] = uf.find(k);
    return SetPartition(labels);
}

SetPartition orbit_partition(std::span<const Permutation> gens) {
    if (gens.empty()) throw std::invalid_argument("orbit_partition: need n when no generators are given");
    return orbit_partition(gens, gens.front().size());
}

void for_each_coarsening(const SetPartition& mu, const std::function<void(const SetPartition&)>& visit) {
    // Restricted-growth strings over the blocks of mu.
    const int k = mu.num_blocks();
    std::vector<int> rgs(k, 0);
    std::vector<int> labels(mu.size());
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == k) {
            for (int p = 0; p < mu.size(); ++p) labels[p] = rgs[mu.labels()[p]];
            visit(SetPartition(labels));
            return;
        }
        for (int v = 0; v <= used; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(used, v + 1));
        }
    };
    if (k == 0) {
        visit(mu);
        return;
    }
    rgs[0] = 0;
    rec(1, 1);
}

std::vector<SetPartition> set_partitions_coarser_than(const SetPartition& mu) {
    std::vector<SetPartition> out;
    for_each_coarsening(mu, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

// --- UnionFind ---

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0), classes_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

int UnionFind::find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
}

bool UnionFind::unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
    bool bump = rank_[rx] == rank_[ry];
    parent_[ry] = rx;
    if (bump) ++rank_[rx];
    history_.push_back({ry, rx, bump});
    --classes_;
    return true;
}

void UnionFind::rollback(std::size_t mark) {
    while (history_.size() > mark) {
        auto link = history_.back();
        history_.pop_back();
        parent_[link.child] = link.child;
        if (link.bumped) --rank_[link.parent];
        ++classes_;
    }
}

}  // namespace hwz
