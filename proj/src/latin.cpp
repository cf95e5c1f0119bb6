#include "olines/latin.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace olines {

LatinSquare::LatinSquare(int r, std::vector<int> entries) : r_(r), entries_(std::move(entries)) {
    if (r_ < 1 || entries_.size() != static_cast<std::size_t>(r_) * static_cast<std::size_t>(r_)) {
        throw std::invalid_argument("LatinSquare: entries must be r x r");
    }
}

bool is_latin(const LatinSquare& l) {
    const int r = l.order();
    for (int i = 1; i <= r; ++i) {
        std::vector<bool> row(r + 1, false), col(r + 1, false);
        for (int j = 1; j <= r; ++j) {
            const int a = l(i, j), b = l(j, i);
            if (a < 1 || a > r || b < 1 || b > r || row[a] || col[b]) return false;
            row[a] = col[b] = true;
        }
    }
    return true;
}

bool is_diagonal(const LatinSquare& l) {
    for (int i = 1; i <= l.order(); ++i) {
        if (l(i, i) != i) return false;
    }
    return true;
}

bool is_skew(const LatinSquare& l) {
    for (int i = 1; i <= l.order(); ++i) {
        for (int j = i + 1; j <= l.order(); ++j) {
            if (l(i, j) == l(j, i)) return false;
        }
    }
    return true;
}

LatinSquare explicit_square_6() {
    return LatinSquare(6, {1, 4, 5, 3, 6, 2,  //
                           3, 2, 6, 5, 1, 4,  //
                           2, 5, 3, 6, 4, 1,  //
                           6, 1, 2, 4, 3, 5,  //
                           4, 6, 1, 2, 5, 3,  //
                           5, 3, 4, 1, 2, 6});
}

namespace {

class Search {
public:
    enum class Outcome { found, exhausted, aborted };

    Search(int r, bool skew, bool lexicographic, std::uint64_t seed, long node_limit)
        : r_(r), skew_(skew), lex_(lexicographic), rng_(seed), limit_(node_limit),
          dom_(static_cast<std::size_t>(r * r), r == 64 ? ~0ULL : (1ULL << r) - 1),
          val_(static_cast<std::size_t>(r * r), 0) {}

    Outcome run() {
        for (int i = 0; i < r_; ++i) {
            if (!assign(i * r_ + i, i + 1)) return Outcome::exhausted;
        }
        try {
            return dfs() ? Outcome::found : Outcome::exhausted;
        } catch (const Abort&) {
            return Outcome::aborted;
        }
    }

    std::vector<int> values() const { return val_; }

private:
    struct Abort {};

    bool remove(int cell, int v) {
        if (val_[cell] != 0) return true;
        const std::uint64_t bit = 1ULL << (v - 1);
        if (dom_[cell] & bit) {
            trail_.emplace_back(cell, dom_[cell]);
            dom_[cell] &= ~bit;
            if (dom_[cell] == 0) return false;
        }
        return true;
    }

    bool assign(int cell, int v) {
        val_[cell] = v;
        const int i = cell / r_, j = cell % r_;
        for (int k = 0; k < r_; ++k) {
            if (k != j && !remove(i * r_ + k, v)) return false;
            if (k != i && !remove(k * r_ + j, v)) return false;
        }
        if (skew_ && i != j && !remove(j * r_ + i, v)) return false;
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            dom_[trail_.back().first] = trail_.back().second;
            trail_.pop_back();
        }
    }

    int pick() {
        const int cells = r_ * r_;
        if (lex_) {
            for (int c = 0; c < cells; ++c) {
                if (val_[c] == 0) return c;
            }
            return -1;
        }
        int best = -1;
        int best_count = 65;
        const int start = static_cast<int>(rng_() % static_cast<std::uint64_t>(cells));
        for (int t = 0; t < cells; ++t) {
            const int c = (start + t) % cells;
            if (val_[c] != 0) continue;
            const int cnt = std::popcount(dom_[c]);
            if (cnt < best_count) {
                best = c;
                best_count = cnt;
                if (cnt <= 1) break;
            }
        }
        return best;
    }

    bool dfs() {
        const int cell = pick();
        if (cell < 0) return true;
        if (++nodes_ > limit_) throw Abort{};
        std::vector<int> candidates;
        for (int v = 1; v <= r_; ++v) {
            if (dom_[cell] & (1ULL << (v - 1))) candidates.push_back(v);
        }
        if (!lex_) std::shuffle(candidates.begin(), candidates.end(), rng_);
        for (int v : candidates) {
            const std::size_t mark = trail_.size();
            if (assign(cell, v) && dfs()) return true;
            undo(mark);
            val_[cell] = 0;
        }
        return false;
    }

    int r_;
    bool skew_;
    bool lex_;
    std::mt19937_64 rng_;
    long limit_;
    long nodes_ = 0;
    std::vector<std::uint64_t> dom_;
    std::vector<int> val_;
    std::vector<std::pair<int, std::uint64_t>> trail_;
};

LatinSquare formula_square(int r) {
    std::vector<int> e;
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) e.push_back(((2 * (i - 1) - (j - 1)) % r + r) % r + 1);
    }
    return LatinSquare(r, std::move(e));
}

// entry ((i1,i2),(j1,j2)) = (A_{i1 j1}, B_{i2 j2}); diagonal and skew carry over
LatinSquare product_square(const LatinSquare& a, const LatinSquare& b) {
    const int p = a.order(), q = b.order(), r = p * q;
    std::vector<int> e(static_cast<std::size_t>(r * r));
    for (int i1 = 1; i1 <= p; ++i1)
        for (int i2 = 1; i2 <= q; ++i2)
            for (int j1 = 1; j1 <= p; ++j1)
                for (int j2 = 1; j2 <= q; ++j2) {
                    const int i = (i1 - 1) * q + i2, j = (j1 - 1) * q + j2;
                    e[static_cast<std::size_t>((i - 1) * r + (j - 1))] = (a(i1, j1) - 1) * q + b(i2, j2);
                }
    return LatinSquare(r, std::move(e));
}

int small_factor(int r) {
    for (int p = 4; p * 4 <= r; ++p) {
        if (r % p == 0) return p;
    }
    return 0;
}

void require_valid(const LatinSquare& l, bool skew, const char* who) {
    if (!is_latin(l) || !is_diagonal(l) || (skew && !is_skew(l))) {
        throw std::logic_error(std::string(who) + ": construction failed verification");
    }
}

}  // namespace

LatinSquare search_square(int r, bool skew, std::uint64_t seed) {
    if (r < 1 || r > 64) throw std::invalid_argument("search_square: order must be in [1, 64]");
    if (skew && (r == 2 || r == 3)) throw std::invalid_argument("search_square: no skew diagonal square of order 2 or 3");
    std::mt19937_64 seeds(seed);
    long limit = 8L * r * r;
    while (true) {
        Search s(r, skew, false, seeds(), limit);
        switch (s.run()) {
            case Search::Outcome::found: return LatinSquare(r, s.values());
            case Search::Outcome::exhausted: throw std::runtime_error("search_square: no square exists");
            case Search::Outcome::aborted: break;
        }
        limit += limit / 2;
    }
}

LatinSquare skew_diagonal_square(int r) {
    if (r < 4) throw std::invalid_argument("skew_diagonal_square: need r >= 4 (got " + std::to_string(r) + ")");
    static std::mutex mu;
    static std::map<int, LatinSquare> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(r); it != memo.end()) return it->second;
    }
    std::optional<LatinSquare> built;
    if (std::gcd(r, 6) == 1) {
        built = formula_square(r);
    } else if (r == 6) {
        built = explicit_square_6();
    } else if (const int p = small_factor(r)) {
        built = product_square(skew_diagonal_square(p), skew_diagonal_square(r / p));
    } else {
        built = search_square(r, true, static_cast<std::uint64_t>(r));
    }
    LatinSquare l = std::move(*built);
    require_valid(l, true, "skew_diagonal_square");
    std::lock_guard lock(mu);
    return memo.emplace(r, std::move(l)).first->second;
}

LatinSquare diagonal_square(int r) {
    if (r < 3) throw std::invalid_argument("diagonal_square: need r >= 3 (got " + std::to_string(r) + ")");
    if (r >= 4) return skew_diagonal_square(r);
    Search s(r, false, true, 0, 1L << 20);
    if (s.run() != Search::Outcome::found) throw std::logic_error("diagonal_square: search failed");
    LatinSquare l(r, s.values());
    require_valid(l, false, "diagonal_square");
    return l;
}

TripleSystem triple_system_from(const LatinSquare& l) {
    TripleSystem t;
    t.r = l.order();
    for (int i = 1; i <= t.r; ++i) {
        for (int j = 1; j <= t.r; ++j) {
            if (i != j) t.triples.push_back({i, j, l(i, j)});
        }
    }
    return t;
}

TripleSystemCheck check_triple_system(const TripleSystem& t) {
    const int r = t.r;
    TripleSystemCheck c;
    c.size_ok = t.triples.size() == static_cast<std::size_t>(r * r - r);
    c.distinct = std::all_of(t.triples.begin(), t.triples.end(), [r](const Triple& x) {
        for (int v : x) {
            if (v < 1 || v > r) return false;
        }
        return x[0] != x[1] && x[1] != x[2] && x[0] != x[2];
    });
    if (!c.distinct) return c;
    // per unordered pair: number of triples and the set of third elements seen
    std::vector<int> count(static_cast<std::size_t>(r * r), 0);
    std::vector<std::vector<int>> thirds(static_cast<std::size_t>(r * r));
    auto key = [r](int a, int b) { return static_cast<std::size_t>((std::min(a, b) - 1) * r + std::max(a, b) - 1); };
    for (const auto& x : t.triples) {
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                const std::size_t k = key(x[p], x[q]);
                ++count[k];
                thirds[k].push_back(x[3 - p - q]);
            }
        }
    }
    c.pairs_six = true;
    c.distinct_third = true;
    for (int a = 1; a <= r; ++a) {
        for (int b = a + 1; b <= r; ++b) {
            const std::size_t k = key(a, b);
            if (count[k] != 6) c.pairs_six = false;
            if (r >= 4) {
                auto& th = thirds[k];
                std::sort(th.begin(), th.end());
                if (th.empty() || th.front() == th.back()) c.distinct_third = false;
            }
        }
    }
    return c;
}

TripleSystem triple_system(int r) {
    if (r < 3) throw std::invalid_argument("triple_system: need r >= 3 (got " + std::to_string(r) + ")");
    TripleSystem t = triple_system_from(r == 3 ? diagonal_square(3) : skew_diagonal_square(r));
    if (!check_triple_system(t).ok()) throw std::logic_error("triple_system: properties failed");
    return t;
}

std::string format_grid(const LatinSquare& l) {
    const int w = static_cast<int>(std::to_string(l.order()).size());
    std::ostringstream out;
    for (int i = 1; i <= l.order(); ++i) {
        for (int j = 1; j <= l.order(); ++j) {
            if (j > 1) out << ' ';
            const std::string s = std::to_string(l(i, j));
            out << std::string(static_cast<std::size_t>(w) - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace olines
