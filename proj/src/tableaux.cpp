#include "apolar/tableaux.hpp"

#include <algorithm>
#include <numeric>

#include "apolar/errors.hpp"

namespace apolar {

std::vector<int> Tableau::reading_word() const {
    std::vector<int> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::string Tableau::str() const {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += '/';
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) s += ' ';
            s += std::to_string(rows[r][c]);
        }
    }
    return s;
}

std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content) {
    if (shape.n() != content.n())
        throw ShapeContentMismatchError("ssyt_enumerate: |shape| != |content|");

    std::vector<Tableau> out;
    if (shape.empty()) {
        out.push_back(Tableau{});
        return out;
    }

    const auto& sh = shape.parts();
    int letters = static_cast<int>(content.num_parts());
    std::vector<int> remaining(content.parts().begin(), content.parts().end());

    Tableau t;
    t.rows.resize(sh.size());
    for (std::size_t r = 0; r < sh.size(); ++r) t.rows[r].assign(static_cast<std::size_t>(sh[r]), 0);

    // Row-major backtracking, smallest letter first.
    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == sh.size()) {
            out.push_back(t);
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == static_cast<std::size_t>(sh[r])) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);                       // weakly increasing row
        if (r > 0 && c < t.rows[r - 1].size()) lo = std::max(lo, t.rows[r - 1][c] + 1);  // strict column
        for (int v = lo; v <= letters; ++v) {
            if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
            remaining[static_cast<std::size_t>(v - 1)] -= 1;
            t.rows[r][c] = v;
            self(self, nr, nc);
            remaining[static_cast<std::size_t>(v - 1)] += 1;
        }
        t.rows[r][c] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

// Charge of a word using each letter 1..m exactly once.
long charge_standard(const std::vector<int>& w) {
    std::vector<std::size_t> pos(w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) pos[static_cast<std::size_t>(w[i])] = i;
    long idx = 0, total = 0;
    for (std::size_t r = 2; r <= w.size(); ++r) {
        if (pos[r] > pos[r - 1]) ++idx;
        total += idx;
    }
    return total;
}

}  // namespace

long charge(const std::vector<int>& word) {
    if (word.empty()) return 0;

    int maxl = *std::max_element(word.begin(), word.end());
    if (*std::min_element(word.begin(), word.end()) < 1)
        throw NonPartitionContentError("charge: letters must be positive");
    std::vector<int> count(static_cast<std::size_t>(maxl), 0);
    for (int v : word) count[static_cast<std::size_t>(v - 1)] += 1;
    for (int i = 1; i < maxl; ++i)
        if (count[static_cast<std::size_t>(i)] > count[static_cast<std::size_t>(i - 1)])
            throw NonPartitionContentError("charge: letter multiplicities must weakly decrease");

    std::vector<int> w = word;
    long total = 0;
    while (!w.empty()) {
        int top = *std::max_element(w.begin(), w.end());
        std::vector<char> picked(w.size(), 0);

        // rightmost 1
        std::size_t cur = 0;
        for (std::size_t i = w.size(); i-- > 0;)
            if (w[i] == 1) {
                cur = i;
                break;
            }
        picked[cur] = 1;

        // then each next letter, scanning leftward and wrapping around
        for (int r = 2; r <= top; ++r) {
            std::size_t i = cur;
            while (true) {
                i = (i == 0) ? w.size() - 1 : i - 1;
                if (w[i] == r) break;
            }
            picked[i] = 1;
            cur = i;
        }

        std::vector<int> sub, rest;
        for (std::size_t i = 0; i < w.size(); ++i) (picked[i] ? sub : rest).push_back(w[i]);
        total += charge_standard(sub);
        w = std::move(rest);
    }
    return total;
}

long charge(const Tableau& t) { return charge(t.reading_word()); }

TPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw ShapeContentMismatchError("kostka_foulkes: |lambda| != |mu|");
    TPoly k;
    for (const Tableau& t : ssyt_enumerate(lambda, mu)) k.add_to_coeff(static_cast<int>(charge(t)), 1);
    return k;
}

GradedCharacter r_mu_character(const Partition& mu) {
    int top = n_stat(mu);
    GradedCharacter g(mu.n());
    for (const Partition& lambda : partitions_of(mu.n())) {
        TPoly k = kostka_foulkes(lambda, mu);
        if (k.is_zero()) continue;
        TPoly flipped;
        for (int j = 0; j <= k.degree(); ++j)
            if (k.coeff(j) != 0) flipped.add_to_coeff(top - j, k.coeff(j));
        g.set(lambda, flipped);
    }
    return g;
}

}  // namespace apolar
