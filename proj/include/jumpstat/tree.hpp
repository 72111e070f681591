#pragma once

#include "jumpstat/errors.hpp"
#include "jumpstat/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jumpstat {

inline constexpr unsigned kDefaultEnumerationCap = 16;
inline constexpr std::size_t kDefaultParseCap = 1'000'000;

enum class Node : std::uint8_t { leaf, internal };

/*
 * Full binary tree stored as its preorder node sequence: an internal node is
 * followed by the preorder of its left subtree, then its right subtree.
 *
 *   .            -> [leaf]
 *   [.,[.,.]]    -> [internal, leaf, internal, leaf, leaf]
 *
 * The flat layout keeps every operation iterative, so degenerate combs with
 * 10^5+ vertices cost no call stack, and structural equality is plain vector
 * equality.
 */
class BinaryTree {
public:
    BinaryTree() : nodes_{Node::leaf} {}

    static BinaryTree leaf() { return BinaryTree{}; }

    static BinaryTree internal(const BinaryTree& left, const BinaryTree& right) {
        BinaryTree tree;
        tree.nodes_.clear();
        tree.nodes_.reserve(1 + left.nodes_.size() + right.nodes_.size());
        tree.nodes_.push_back(Node::internal);
        tree.nodes_.insert(tree.nodes_.end(), left.nodes_.begin(), left.nodes_.end());
        tree.nodes_.insert(tree.nodes_.end(), right.nodes_.begin(), right.nodes_.end());
        return tree;
    }

    /// Validates that `nodes` is a complete preorder sequence.
    static BinaryTree from_preorder(std::vector<Node> nodes) {
        if (nodes.empty() || subtree_end(nodes, 0) != nodes.size()) {
            throw ContractViolation("preorder sequence is not a single full binary tree");
        }
        BinaryTree tree;
        tree.nodes_ = std::move(nodes);
        return tree;
    }

    bool is_leaf() const { return nodes_.front() == Node::leaf; }

    /// Number of internal vertices.
    std::size_t size() const { return (nodes_.size() - 1) / 2; }

    BinaryTree left() const {
        require_internal();
        return slice(1, subtree_end(nodes_, 1));
    }

    BinaryTree right() const {
        require_internal();
        return slice(subtree_end(nodes_, 1), nodes_.size());
    }

    std::span<const Node> preorder() const { return nodes_; }

    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

    /// One past the last index of the subtree rooted at `start`, or
    /// `nodes.size() + 1` if the sequence runs out first.
    static std::size_t subtree_end(std::span<const Node> nodes, std::size_t start) {
        std::size_t open = 1;
        for (std::size_t i = start; i < nodes.size(); ++i) {
            if (nodes[i] == Node::internal) {
                ++open;
            } else if (--open == 0) {
                return i + 1;
            }
        }
        return nodes.size() + 1;
    }

private:
    friend class TreeOdometer;

    void require_internal() const {
        if (is_leaf()) throw ContractViolation("a leaf has no children");
    }

    BinaryTree slice(std::size_t first, std::size_t last) const {
        BinaryTree tree;
        tree.nodes_.assign(nodes_.begin() + static_cast<std::ptrdiff_t>(first),
                           nodes_.begin() + static_cast<std::ptrdiff_t>(last));
        return tree;
    }

    std::vector<Node> nodes_;
};

struct TreeStats {
    std::uint64_t v = 0;   // internal vertices
    std::uint64_t j = 0;   // number of jumps
    std::uint64_t d = 0;   // depth of the rightmost leaf
    std::uint64_t jd = 0;  // sum of jump distances

    friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

/*
 * Post-order evaluation of the four recursions
 *
 *   V([L,R])  = V(L) + V(R) + 1
 *   J([L,R])  = J(R)                 if L is a leaf
 *             = J(L) + J(R) + 1      otherwise
 *   D([L,R])  = 1 + D(R)
 *   JD([L,R]) = JD(L) + JD(R) + D(L)
 *
 * with all four zero on a leaf. Scanning the preorder sequence backwards
 * visits both children of a node before the node itself, so a value stack
 * replaces recursion.
 */
inline TreeStats compute_stats(const BinaryTree& tree) {
    std::vector<TreeStats> stack;
    const auto nodes = tree.preorder();
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
        if (*it == Node::leaf) {
            stack.push_back(TreeStats{});
            continue;
        }
        // Reverse preorder pushes the right subtree first, so the left one is on top.
        const TreeStats left = stack.back();
        stack.pop_back();
        const TreeStats right = stack.back();
        stack.pop_back();
        TreeStats s;
        s.v = left.v + right.v + 1;
        s.j = left.v == 0 ? right.j : left.j + right.j + 1;
        s.d = 1 + right.d;
        s.jd = left.jd + right.jd + left.d;
        stack.push_back(s);
    }
    return stack.back();
}

/// Canonical text: "." for a leaf, "[L,R]" for an internal node.
inline std::string to_string(const BinaryTree& tree) {
    std::string out;
    out.reserve(tree.preorder().size() * 2);
    // Per open bracket: has its left child been completed yet?
    std::vector<bool> left_done;
    for (Node node : tree.preorder()) {
        if (node == Node::internal) {
            out += '[';
            left_done.push_back(false);
            continue;
        }
        out += '.';
        while (!left_done.empty()) {
            if (!left_done.back()) {
                left_done.back() = true;
                out += ',';
                break;
            }
            left_done.pop_back();
            out += ']';
        }
    }
    return out;
}

/// Parses the grammar  Tree := "." | "[" Tree "," Tree "]"  ignoring
/// whitespace. Refuses trees with more than `max_internal` internal vertices.
inline BinaryTree parse_tree(std::string_view text, std::size_t max_internal = kDefaultParseCap) {
    std::vector<Node> nodes;
    // Per open bracket: number of children completed so far (0 or 1).
    std::vector<std::uint8_t> open;
    bool expect_tree = true;
    std::size_t internal_count = 0;

    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;

        if (expect_tree) {
            if (c == '[') {
                if (++internal_count > max_internal) {
                    throw ResourceRefusal("tree exceeds " + std::to_string(max_internal) +
                                          " internal vertices");
                }
                nodes.push_back(Node::internal);
                open.push_back(0);
            } else if (c == '.') {
                nodes.push_back(Node::leaf);
                expect_tree = false;
            } else {
                throw ParseError(std::string("expected '[' or '.', found '") + c + "'", pos);
            }
            continue;
        }

        if (open.empty()) throw ParseError("trailing input after tree", pos);
        if (open.back() == 0) {
            if (c != ',') throw ParseError(std::string("expected ',', found '") + c + "'", pos);
            open.back() = 1;
            expect_tree = true;
        } else {
            if (c != ']') throw ParseError(std::string("expected ']', found '") + c + "'", pos);
            open.pop_back();
        }
    }
    if (expect_tree || !open.empty()) throw ParseError("unexpected end of input", text.size());
    return BinaryTree::from_preorder(std::move(nodes));
}

/// Number of full binary trees with n internal vertices, (2n)!/(n!(n+1)!).
inline Integer catalan(unsigned long n) {
    return binomial(2 * n, n) / (n + 1);
}

/*
 * Lexicographic odometer over all trees with a fixed number of internal
 * vertices. Order: left-subtree size ascending, then the left subtree's own
 * order, then the right subtree's. Holds O(n) sub-odometers and one current
 * tree; never materializes the whole class.
 */
class TreeOdometer {
public:
    explicit TreeOdometer(unsigned n) : n_(n) { restart_split(); }

    const BinaryTree& current() const { return current_; }

    /// Steps to the next tree; false once the sequence is exhausted.
    bool advance() {
        if (n_ == 0) return false;
        if (right_->advance()) {
            rebuild();
            return true;
        }
        if (left_->advance()) {
            right_ = std::make_unique<TreeOdometer>(n_ - 1 - left_size_);
            rebuild();
            return true;
        }
        if (left_size_ + 1 < n_) {
            ++left_size_;
            restart_split();
            return true;
        }
        return false;
    }

private:
    void restart_split() {
        if (n_ == 0) return;
        left_ = std::make_unique<TreeOdometer>(left_size_);
        right_ = std::make_unique<TreeOdometer>(n_ - 1 - left_size_);
        rebuild();
    }

    void rebuild() {
        const auto& l = left_->current_.nodes_;
        const auto& r = right_->current_.nodes_;
        auto& out = current_.nodes_;
        out.clear();
        out.push_back(Node::internal);
        out.insert(out.end(), l.begin(), l.end());
        out.insert(out.end(), r.begin(), r.end());
    }

    unsigned n_;
    unsigned left_size_ = 0;
    std::unique_ptr<TreeOdometer> left_;
    std::unique_ptr<TreeOdometer> right_;
    BinaryTree current_;
};

/// Single-pass range over every tree with n internal vertices:
///
///     for (const BinaryTree& t : enumerate_trees(5)) { ... }
class TreeRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = BinaryTree;
        using difference_type = std::ptrdiff_t;
        using pointer = const BinaryTree*;
        using reference = const BinaryTree&;

        iterator() = default;
        explicit iterator(TreeOdometer* odometer) : odometer_(odometer) {}

        reference operator*() const { return odometer_->current(); }
        pointer operator->() const { return &odometer_->current(); }

        iterator& operator++() {
            if (!odometer_->advance()) odometer_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) {
            return a.odometer_ == b.odometer_;
        }

    private:
        TreeOdometer* odometer_ = nullptr;
    };

    explicit TreeRange(unsigned n) : odometer_(std::make_unique<TreeOdometer>(n)) {}

    iterator begin() { return iterator(odometer_.get()); }
    iterator end() { return iterator(); }

private:
    std::unique_ptr<TreeOdometer> odometer_;
};

/// Throws ResourceRefusal when n exceeds `cap`.
inline TreeRange enumerate_trees(unsigned n, unsigned cap = kDefaultEnumerationCap) {
    if (n > cap) {
        throw ResourceRefusal("enumeration of n=" + std::to_string(n) + " exceeds cap " +
                              std::to_string(cap));
    }
    return TreeRange(n);
}

}  // namespace jumpstat
