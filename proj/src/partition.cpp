#include "modrep/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace modrep {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Prime::Prime(int p) : p_(p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::column(int j) const noexcept {
    int c = 0;
    for (int part : parts_) {
        if (part < j) break;
        ++c;
    }
    return c;
}

Partition Partition::with_node(const Node& x) const {
    std::vector<int> p = parts_;
    if (x.row == length() + 1 && x.col == 1) {
        p.push_back(1);
    } else if (x.row >= 1 && x.row <= length() && x.col == parts_[x.row - 1] + 1) {
        ++p[x.row - 1];
    } else {
        throw std::invalid_argument("node is not addable");
    }
    return Partition(std::move(p));
}

Partition Partition::without_node(const Node& x) const {
    if (x.row < 1 || x.row > length() || x.col != parts_[x.row - 1])
        throw std::invalid_argument("node is not removable");
    std::vector<int> p = parts_;
    if (--p[x.row - 1] == 0) p.pop_back();
    return Partition(std::move(p));
}

std::vector<Node> Partition::nodes() const {
    std::vector<Node> out;
    out.reserve(n_);
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
    return out;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']' &&
            c != '(' && c != ')')
            s += c;
    std::vector<int> parts;
    if (s.empty()) return Partition();
    std::stringstream ss(s);
    std::string item;
    auto to_int = [&](const std::string& tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed partition '" + text + "'");
        if (tok.size() > 6) throw std::invalid_argument("partition part too large in '" + text + "'");
        return std::stoi(tok);
    };
    while (std::getline(ss, item, ',')) {
        auto caret = item.find('^');
        if (caret == std::string::npos) {
            parts.push_back(to_int(item));
        } else {
            int value = to_int(item.substr(0, caret));
            int times = to_int(item.substr(caret + 1));
            if (times > 100000) throw std::invalid_argument("exponent too large in '" + text + "'");
            parts.insert(parts.end(), times, value);
        }
    }
    return Partition(std::move(parts));
}

bool is_p_restricted(const Partition& lambda, const Prime& p) {
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.row(i) - lambda.row(i + 1) >= p.value()) return false;
    return true;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Generates in lexicographically decreasing order.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, remaining - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Partition> restricted_partitions(int n, const Prime& p) {
    std::vector<Partition> out;
    for (auto& lam : partitions_of(n))
        if (is_p_restricted(lam, p)) out.push_back(std::move(lam));
    return out;
}

Dominance dominance_compare(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw SizeMismatch("dominance comparison needs partitions of equal size");
    bool le = true, ge = true;
    int sl = 0, sm = 0;
    int rows = std::max(lambda.length(), mu.length());
    for (int i = 1; i <= rows; ++i) {
        sl += lambda.row(i);
        sm += mu.row(i);
        if (sl > sm) le = false;
        if (sl < sm) ge = false;
    }
    if (le && ge) return Dominance::equal;
    if (le) return Dominance::less;
    if (ge) return Dominance::greater;
    return Dominance::incomparable;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    auto d = dominance_compare(lambda, mu);
    return d == Dominance::greater || d == Dominance::equal;
}

std::strong_ordering total_order(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw SizeMismatch("total order needs partitions of equal size");
    // Lexicographic order already refines dominance, so the dominance step
    // and the descending tiebreak collapse into one comparison.
    return mu.parts() <=> lambda.parts();
}

std::vector<Partition> sort_by_dominance(std::vector<Partition> parts, TieBreak tie) {
    if (tie == TieBreak::lex_descending) {
        std::sort(parts.begin(), parts.end(),
                  [](const Partition& a, const Partition& b) { return total_order(a, b) < 0; });
        return parts;
    }
    // Kahn's algorithm: repeatedly emit a maximal element, preferring the
    // lexicographically smallest one.
    std::vector<Partition> out;
    std::vector<bool> used(parts.size(), false);
    for (std::size_t step = 0; step < parts.size(); ++step) {
        std::size_t best = parts.size();
        for (std::size_t a = 0; a < parts.size(); ++a) {
            if (used[a]) continue;
            bool maximal = true;
            for (std::size_t b = 0; b < parts.size() && maximal; ++b)
                if (!used[b] && b != a && dominance_compare(parts[b], parts[a]) == Dominance::greater)
                    maximal = false;
            if (maximal && (best == parts.size() || parts[a] < parts[best])) best = a;
        }
        used[best] = true;
        out.push_back(parts[best]);
    }
    return out;
}

std::vector<Node> addable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    for (int i = 1; i <= lambda.length() + 1; ++i)
        if (i == 1 || lambda.row(i) < lambda.row(i - 1)) out.push_back({i, lambda.row(i) + 1});
    return out;
}

std::vector<Node> removable_nodes(const Partition& mu) {
    std::vector<Node> out;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.row(i) > mu.row(i + 1)) out.push_back({i, mu.row(i)});
    return out;
}

std::vector<Node> addable_nodes(const Partition& lambda, int i, const Prime& p) {
    std::vector<Node> out;
    for (const auto& x : addable_nodes(lambda))
        if (x.residue(p) == i) out.push_back(x);
    return out;
}

std::vector<Node> removable_nodes(const Partition& mu, int i, const Prime& p) {
    std::vector<Node> out;
    for (const auto& x : removable_nodes(mu))
        if (x.residue(p) == i) out.push_back(x);
    return out;
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    std::vector<std::vector<int>> h(lambda.length());
    for (int i = 1; i <= lambda.length(); ++i) {
        h[i - 1].resize(lambda.row(i));
        for (int j = 1; j <= lambda.row(i); ++j)
            h[i - 1][j - 1] = (lambda.row(i) - j) + (lambda.column(j) - i) + 1;
    }
    return h;
}

std::uint64_t hook_formula_count(const Partition& lambda) {
    // Interleave multiplication and division to stay within 64 bits for
    // moderate n; the running value is always an integer multinomial-like ratio.
    std::vector<int> hooks;
    for (const auto& row : hook_lengths(lambda))
        hooks.insert(hooks.end(), row.begin(), row.end());
    std::vector<int> num(lambda.size());
    std::iota(num.begin(), num.end(), 1);
    // Cancel prime factors between numerator and denominator.
    std::vector<int> exps(lambda.size() + 1, 0);
    auto add_factors = [&](int x, int sign) {
        for (int d = 2; d <= x; ++d)
            while (x % d == 0) {
                exps[d] += sign;
                x /= d;
            }
    };
    for (int k : num) add_factors(k, +1);
    for (int k : hooks) add_factors(k, -1);
    std::uint64_t r = 1;
    for (std::size_t d = 2; d < exps.size(); ++d) {
        if (exps[d] < 0) throw std::logic_error("hook formula did not reduce to an integer");
        for (int e = 0; e < exps[d]; ++e) r *= d;
    }
    return r;
}

}  // namespace modrep
