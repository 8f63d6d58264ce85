#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cox/tree.hpp"

namespace cox {

/// AST for the tree DSL:
///   A4  D5  E10  ~D4  ~E7            diagram atoms
///   S(0;1,2,6)                       the three-or-more-arm family
///   join(A3@1, A3@1, A1@1)           join at chosen vertices
///   file(graph.edges)                edge-list file
struct TreeExpr;

struct DiagramNode {
    char family;    // 'A', 'D' or 'E'
    bool euclidean; // true for ~D / ~E
    int n;

    friend bool operator==(const DiagramNode&, const DiagramNode&) = default;
};

struct SalemNode {
    SalemSpec spec;

    friend bool operator==(const SalemNode& a, const SalemNode& b) { return a.spec == b.spec; }
};

struct FileNode {
    std::string path;

    friend bool operator==(const FileNode&, const FileNode&) = default;
};

struct JoinNode {
    std::vector<std::pair<TreeExpr, int>> parts; // (subtree, attach vertex)

    friend bool operator==(const JoinNode& a, const JoinNode& b);
};

struct TreeExpr {
    std::variant<DiagramNode, SalemNode, JoinNode, FileNode> node;

    friend bool operator==(const TreeExpr& a, const TreeExpr& b) { return a.node == b.node; }
};

inline bool operator==(const JoinNode& a, const JoinNode& b) { return a.parts == b.parts; }

namespace detail {

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    TreeExpr parse() {
        TreeExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw syntax_error(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_int() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start || (text_[start] == '-' && pos_ == start + 1))
            fail("expected integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    std::string parse_word() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected a diagram name, 'S', 'join' or 'file'");
        return std::string(text_.substr(start, pos_ - start));
    }

    TreeExpr parse_expr() {
        char c = peek();
        if (c == '~') {
            ++pos_;
            std::string w = parse_word();
            if (w != "D" && w != "E")
                fail("expected D or E after '~'");
            return TreeExpr{DiagramNode{w[0], true, parse_int()}};
        }
        std::string w = parse_word();
        if (w == "join")
            return parse_join();
        if (w == "file")
            return parse_file();
        if (w == "S")
            return parse_salem();
        if (w == "A" || w == "D" || w == "E")
            return TreeExpr{DiagramNode{w[0], false, parse_int()}};
        fail("unknown construct '" + w + "'");
    }

    TreeExpr parse_salem() {
        expect('(');
        SalemSpec spec;
        spec.i = parse_int();
        expect(';');
        spec.arms.push_back(parse_int());
        while (peek() == ',') {
            ++pos_;
            spec.arms.push_back(parse_int());
        }
        if (peek() != ')')
            fail("expected ',' or ')' in S(...)");
        ++pos_;
        return TreeExpr{SalemNode{std::move(spec)}};
    }

    TreeExpr parse_join() {
        expect('(');
        JoinNode j;
        for (;;) {
            TreeExpr child = parse_expr();
            expect('@');
            j.parts.emplace_back(std::move(child), parse_int());
            char c = peek();
            if (c == ',') {
                ++pos_;
                continue;
            }
            if (c == ')') {
                ++pos_;
                break;
            }
            fail("expected ',' or ')' in join(...)");
        }
        return TreeExpr{std::move(j)};
    }

    TreeExpr parse_file() {
        expect('(');
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ')')
            ++pos_;
        if (pos_ == text_.size())
            fail("unterminated file(...)");
        std::string path(text_.substr(start, pos_ - start));
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back())))
            path.pop_back();
        if (path.empty())
            fail("empty path in file(...)");
        ++pos_; // ')'
        return TreeExpr{FileNode{std::move(path)}};
    }

    std::string_view text_;
    size_t pos_ = 0;
};

} // namespace detail

inline TreeExpr parse_tree_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Canonical text form; parse(print(e)) == e.
inline std::string print_tree_expr(const TreeExpr& e) {
    struct Printer {
        std::string operator()(const DiagramNode& d) const {
            std::string s = d.euclidean ? "~" : "";
            s += d.family;
            s += std::to_string(d.n);
            return s;
        }
        std::string operator()(const SalemNode& s) const { return s.spec.to_string(); }
        std::string operator()(const FileNode& f) const { return "file(" + f.path + ")"; }
        std::string operator()(const JoinNode& j) const {
            std::string s = "join(";
            for (size_t k = 0; k < j.parts.size(); ++k) {
                if (k)
                    s += ',';
                s += print_tree_expr(j.parts[k].first);
                s += '@';
                s += std::to_string(j.parts[k].second);
            }
            return s + ")";
        }
    };
    return std::visit(Printer{}, e.node);
}

/// Build the concrete tree; range errors from the builders pass through.
inline Tree elaborate(const TreeExpr& e) {
    struct Builder {
        Tree operator()(const DiagramNode& d) const {
            if (d.euclidean)
                return d.family == 'D' ? euclidean_D(d.n) : euclidean_E(d.n);
            switch (d.family) {
            case 'A':
                return path(d.n);
            case 'D':
                return dynkin_D(d.n);
            default:
                return dynkin_E(d.n);
            }
        }
        Tree operator()(const SalemNode& s) const { return salem_tree(s.spec); }
        Tree operator()(const FileNode& f) const { return read_edge_list_file(f.path); }
        Tree operator()(const JoinNode& j) const {
            std::vector<std::pair<Tree, int>> parts;
            parts.reserve(j.parts.size());
            for (const auto& [child, attach] : j.parts)
                parts.emplace_back(elaborate(child), attach);
            return join(parts);
        }
    };
    return std::visit(Builder{}, e.node);
}

} // namespace cox
