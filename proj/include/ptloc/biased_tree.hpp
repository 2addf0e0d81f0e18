#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "ptloc/rational.hpp"

namespace ptloc {

// Weighted search tree with access depth O(log(W/w)). Built by weighted
// median (each subtree carries at most half of its parent's weight) and kept
// within a 3/4 weight-balance by rebuilding the highest out-of-balance node
// on the touched path. Nodes are immutable and shared, so copying a tree is
// an O(1) snapshot and old versions stay valid across edits of new ones.
//
// All positional indices are 0-based over the in-order sequence. Split and
// join rebuild from the flattened sequence; the structures built on top only
// splice trees whose sizes are bounded by the update footprint, and update
// asymptotics beyond correctness are not a goal here.
template <class T>
class BiasedTree {
    struct Node;
    using Ptr = std::shared_ptr<const Node>;
    struct Node {
        T item;
        Rat w;
        Rat total;
        size_t size;
        Ptr l, r;
    };

    static constexpr double kDepthConst = 2.5;

    Ptr root_;

    static Rat tw(const Ptr& n) { return n ? n->total : Rat(0); }
    static size_t sz(const Ptr& n) { return n ? n->size : 0; }

    static Ptr mk(T item, Rat w, Ptr l, Ptr r) {
        auto n = std::make_shared<Node>();
        n->item = std::move(item);
        n->w = std::move(w);
        n->total = n->w + tw(l) + tw(r);
        n->size = 1 + sz(l) + sz(r);
        n->l = std::move(l);
        n->r = std::move(r);
        return n;
    }

    static void flatten(const Ptr& n, std::vector<std::pair<T, Rat>>& out) {
        if (!n) return;
        flatten(n->l, out);
        out.emplace_back(n->item, n->w);
        flatten(n->r, out);
    }

    static Ptr build_range(const std::vector<std::pair<T, Rat>>& v,
                           const std::vector<Rat>& prefix, size_t lo, size_t hi) {
        if (lo >= hi) return nullptr;
        // Weighted median pivot: largest j with weight of [lo, j) at most half
        // of the range weight, so both sides weigh at most half.
        Rat w_range = prefix[hi] - prefix[lo];
        Rat half = w_range / 2;
        size_t a = lo, b = hi - 1;
        while (a < b) {
            size_t mid = (a + b + 1) / 2;
            if (prefix[mid] - prefix[lo] <= half)
                a = mid;
            else
                b = mid - 1;
        }
        size_t j = a;
        return mk(v[j].first, v[j].second, build_range(v, prefix, lo, j),
                  build_range(v, prefix, j + 1, hi));
    }

    static Ptr build_vec(const std::vector<std::pair<T, Rat>>& v) {
        std::vector<Rat> prefix(v.size() + 1);
        for (size_t i = 0; i < v.size(); ++i) prefix[i + 1] = prefix[i] + v[i].second;
        return build_range(v, prefix, 0, v.size());
    }

    static bool balanced(const Ptr& n) {
        if (!n) return true;
        Rat limit = 3 * n->total;
        return 4 * tw(n->l) <= limit && 4 * tw(n->r) <= limit;
    }

    static Ptr rebuild(const Ptr& n) {
        std::vector<std::pair<T, Rat>> v;
        v.reserve(sz(n));
        flatten(n, v);
        return build_vec(v);
    }

    // Rebuild the highest out-of-balance node on the path to index i.
    static Ptr restore(const Ptr& n, size_t i) {
        if (!n) return n;
        if (!balanced(n)) return rebuild(n);
        size_t ls = sz(n->l);
        if (i < ls) {
            Ptr nl = restore(n->l, i);
            if (nl == n->l) return n;
            return mk(n->item, n->w, std::move(nl), n->r);
        }
        if (i == ls) return n;
        Ptr nr = restore(n->r, i - ls - 1);
        if (nr == n->r) return n;
        return mk(n->item, n->w, n->l, std::move(nr));
    }

    static Ptr insert_at(const Ptr& n, size_t i, const T& item, const Rat& w) {
        if (!n) return mk(item, w, nullptr, nullptr);
        size_t ls = sz(n->l);
        if (i <= ls) return mk(n->item, n->w, insert_at(n->l, i, item, w), n->r);
        return mk(n->item, n->w, n->l, insert_at(n->r, i - ls - 1, item, w));
    }

    static Ptr erase_at(const Ptr& n, size_t i) {
        size_t ls = sz(n->l);
        if (i < ls) return mk(n->item, n->w, erase_at(n->l, i), n->r);
        if (i > ls) return mk(n->item, n->w, n->l, erase_at(n->r, i - ls - 1));
        if (!n->l) return n->r;
        if (!n->r) return n->l;
        // Pull the in-order successor up.
        const Node* s = n->r.get();
        while (s->l) s = s->l.get();
        return mk(s->item, s->w, n->l, erase_at(n->r, 0));
    }

    static Ptr replace_at(const Ptr& n, size_t i, const T& item, const Rat& w) {
        size_t ls = sz(n->l);
        if (i < ls) return mk(n->item, n->w, replace_at(n->l, i, item, w), n->r);
        if (i > ls) return mk(n->item, n->w, n->l, replace_at(n->r, i - ls - 1, item, w));
        return mk(item, w, n->l, n->r);
    }

    static const Node* node_at(const Ptr& n, size_t i) {
        const Node* c = n.get();
        while (c) {
            size_t ls = sz(c->l);
            if (i < ls) {
                c = c->l.get();
            } else if (i == ls) {
                return c;
            } else {
                i -= ls + 1;
                c = c->r.get();
            }
        }
        return nullptr;
    }

  public:
    static constexpr size_t npos = static_cast<size_t>(-1);

    BiasedTree() = default;

    static BiasedTree build(const std::vector<std::pair<T, Rat>>& items) {
        for (const auto& [it, w] : items) PTLOC_CHECK(w > 0, "biased tree weight must be positive");
        BiasedTree t;
        t.root_ = build_vec(items);
        return t;
    }

    size_t size() const { return sz(root_); }
    bool empty() const { return !root_; }
    Rat total_weight() const { return tw(root_); }

    const T& item(size_t i) const {
        const Node* n = node_at(root_, i);
        PTLOC_CHECK(n, "biased tree index out of range");
        return n->item;
    }
    const Rat& weight(size_t i) const {
        const Node* n = node_at(root_, i);
        PTLOC_CHECK(n, "biased tree index out of range");
        return n->w;
    }
    const T& front() const { return item(0); }
    const T& back() const { return item(size() - 1); }

    void insert(size_t i, const T& it, const Rat& w) {
        PTLOC_CHECK(w > 0, "biased tree weight must be positive");
        PTLOC_CHECK(i <= size(), "biased tree insert out of range");
        root_ = insert_at(root_, i, it, w);
        root_ = restore(root_, i);
    }
    void erase(size_t i) {
        PTLOC_CHECK(i < size(), "biased tree erase out of range");
        root_ = erase_at(root_, i);
        // Weights changed along the path to position i and, when a successor
        // was pulled up, along the left spine after it; both are the paths to
        // positions i and i+1 in the new tree.
        if (root_) {
            root_ = restore(root_, i < sz(root_) ? i : sz(root_) - 1);
            if (i + 1 < sz(root_)) root_ = restore(root_, i + 1);
        }
    }
    void replace(size_t i, const T& it, const Rat& w) {
        PTLOC_CHECK(w > 0, "biased tree weight must be positive");
        PTLOC_CHECK(i < size(), "biased tree replace out of range");
        root_ = replace_at(root_, i, it, w);
        root_ = restore(root_, i);
    }

    // Three-way search: cmp(item) < 0 when the target precedes item, > 0 when
    // it follows, 0 at a hit. Returns the index or npos, counting visited
    // nodes into *visits when provided.
    size_t find(const std::function<int(const T&)>& cmp, long* visits = nullptr) const {
        const Node* c = root_.get();
        size_t base = 0;
        while (c) {
            if (visits) ++*visits;
            int s = cmp(c->item);
            if (s == 0) return base + sz(c->l);
            if (s < 0) {
                c = c->l.get();
            } else {
                base += sz(c->l) + 1;
                c = c->r.get();
            }
        }
        return npos;
    }

    std::pair<BiasedTree, BiasedTree> split(size_t i) const {
        std::vector<std::pair<T, Rat>> v;
        v.reserve(size());
        flatten(root_, v);
        std::vector<std::pair<T, Rat>> a(v.begin(), v.begin() + i);
        std::vector<std::pair<T, Rat>> b(v.begin() + i, v.end());
        return {build(a), build(b)};
    }

    static BiasedTree join(const BiasedTree& a, const BiasedTree& b) {
        std::vector<std::pair<T, Rat>> v;
        v.reserve(a.size() + b.size());
        flatten(a.root_, v);
        flatten(b.root_, v);
        return build(v);
    }

    std::vector<std::pair<T, Rat>> to_vector() const {
        std::vector<std::pair<T, Rat>> v;
        v.reserve(size());
        flatten(root_, v);
        return v;
    }

    template <class F>
    void for_each(F&& f) const {
        std::vector<std::pair<T, Rat>> v = to_vector();
        for (auto& [it, w] : v) f(it, w);
    }

    size_t depth_of(size_t i) const {
        const Node* c = root_.get();
        size_t d = 0;
        while (c) {
            size_t ls = sz(c->l);
            if (i < ls) {
                c = c->l.get();
            } else if (i == ls) {
                return d;
            } else {
                i -= ls + 1;
                c = c->r.get();
            }
            ++d;
        }
        PTLOC_CHECK(false, "depth_of index out of range");
        return 0;
    }

    // Verify the weight-balance invariant and the contract depth bound
    // depth(item) <= 2.5*(log2(W/w) + 1).
    void check_invariants() const {
        check_node(root_);
        Rat W = total_weight();
        auto v = to_vector();
        for (size_t i = 0; i < v.size(); ++i) {
            double d = static_cast<double>(depth_of(i));
            double bound =
                kDepthConst * (std::log2(rat_to_double(W / v[i].second)) + 1.0) + 1e-9;
            PTLOC_CHECK(d <= bound, "biased tree depth bound violated");
        }
    }

  private:
    static void check_node(const Ptr& n) {
        if (!n) return;
        PTLOC_CHECK(balanced(n), "biased tree weight balance violated");
        check_node(n->l);
        check_node(n->r);
    }
};

// Copying a BiasedTree already snapshots it; this alias names the intent at
// the places that rely on version persistence.
template <class T>
using PersistentBiasedTree = BiasedTree<T>;

}  // namespace ptloc
