#include "wicks/transform.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <thread>

#include "wicks/surface.hpp"

namespace wicks {

namespace {

// positions of the positive and negative occurrence of `id`
std::pair<int, int> occurrence_positions(const SignedWord& w, int id) {
    int pos = -1, neg = -1;
    for (int i = 0; i < w.size(); ++i) {
        if (w[i].id != id) continue;
        if (w[i].sign > 0) {
            if (pos >= 0) throw MalformedWord("letter occurs twice with positive sign");
            pos = i;
        } else {
            if (neg >= 0) throw MalformedWord("letter occurs twice with negative sign");
            neg = i;
        }
    }
    if (pos < 0 || neg < 0)
        throw BadSite("split letter id " + std::to_string(id) + " absent or unbalanced");
    return {pos, neg};
}

// the split pair replacing an occurrence with sign s: a1 a2 for the positive
// occurrence, a2' a1' for the negative one (id1 keeps the old id)
std::pair<Letter, Letter> split_block(int id1, int id2, int s) {
    if (s > 0) return {Letter{id1, +1}, Letter{id2, +1}};
    return {Letter{id2, -1}, Letter{id1, -1}};
}

void check_kind(const TransformSite& site, TransformKind kind) {
    if (site.kind != kind) throw BadSite("site kind does not match the transformation");
}

} // namespace

SignedWord apply_alpha(const SignedWord& w, const TransformSite& site) {
    check_kind(site, TransformKind::alpha);
    int a = site.ids[0];
    auto [pos, neg] = occurrence_positions(w, a);
    int target = site.sides[0] > 0 ? pos : neg;

    int base = w.max_id();
    int a2 = base + 1, d = base + 2, e = base + 3, f = base + 4, h = base + 5, i_ = base + 6;
    const Letter frag[] = {{i_, +1}, {d, -1}, {e, +1}, {f, -1}, {d, +1},
                           {h, +1},  {e, -1}, {f, +1}, {h, -1}, {i_, -1}};

    SignedWord out;
    out.letters.reserve(static_cast<size_t>(w.size()) + 12);
    for (int p = 0; p < w.size(); ++p) {
        if (w[p].id != a) {
            out.letters.push_back(w[p]);
            continue;
        }
        auto [first, second] = split_block(a, a2, w[p].sign);
        out.letters.push_back(first);
        if (p == target)
            for (const Letter& l : frag) out.letters.push_back(l);
        out.letters.push_back(second);
    }
    return out;
}

SignedWord apply_beta(const SignedWord& w, const TransformSite& site) {
    check_kind(site, TransformKind::beta);
    int a = site.ids[0], b = site.ids[1];
    if (a == b) throw BadSite("beta requires two distinct split letters");
    auto [apos, aneg] = occurrence_positions(w, a);
    auto [bpos, bneg] = occurrence_positions(w, b);
    int atarget = site.sides[0] > 0 ? apos : aneg;
    int btarget = site.sides[1] > 0 ? bpos : bneg;

    int base = w.max_id();
    int a2 = base + 1, b2 = base + 2, d = base + 3, e = base + 4, f = base + 5, h = base + 6;
    const Letter frag_a[] = {{d, -1}, {e, +1}, {f, -1}, {d, +1}};
    const Letter frag_b[] = {{h, +1}, {e, -1}, {f, +1}, {h, -1}};

    SignedWord out;
    out.letters.reserve(static_cast<size_t>(w.size()) + 12);
    for (int p = 0; p < w.size(); ++p) {
        if (w[p].id != a && w[p].id != b) {
            out.letters.push_back(w[p]);
            continue;
        }
        bool is_a = w[p].id == a;
        auto [first, second] = split_block(w[p].id, is_a ? a2 : b2, w[p].sign);
        out.letters.push_back(first);
        if (is_a && p == atarget)
            for (const Letter& l : frag_a) out.letters.push_back(l);
        if (!is_a && p == btarget)
            for (const Letter& l : frag_b) out.letters.push_back(l);
        out.letters.push_back(second);
    }
    return out;
}

SignedWord apply_gamma(const SignedWord& w, const TransformSite& site) {
    check_kind(site, TransformKind::gamma);
    int a = site.ids[0], b = site.ids[1], c = site.ids[2];
    if (a == b || a == c || b == c) throw BadSite("gamma requires three distinct split letters");
    int eps = site.sides[0], delta = site.sides[1], psi = site.sides[2];

    auto [apos, aneg] = occurrence_positions(w, a);
    auto [bpos, bneg] = occurrence_positions(w, b);
    auto [cpos, cneg] = occurrence_positions(w, c);
    int pa = eps > 0 ? apos : aneg;
    int pb = delta > 0 ? bpos : bneg;
    int pc = psi > 0 ? cpos : cneg;

    int n = w.size();
    int rel_b = ((pb - pa) % n + n) % n;
    int rel_c = ((pc - pa) % n + n) % n;
    if (!(0 < rel_b && rel_b < rel_c))
        throw BadSite("chosen occurrences are not in cyclic order a..b..c");

    int base = w.max_id();
    int a2 = base + 1, b2 = base + 2, c2 = base + 3, d = base + 4, e = base + 5, f = base + 6;

    // the non-selected occurrences split in place; the selected ones are
    // reassembled per the interleaving template
    auto copy_segment = [&](SignedWord& out, int from, int to) { // (from, to) exclusive, cyclic
        for (int t = (from + 1) % n; t != to; t = (t + 1) % n) {
            Letter l = w[t];
            if (l.id == a || l.id == b || l.id == c) {
                int fresh = l.id == a ? a2 : l.id == b ? b2 : c2;
                auto [first, second] = split_block(l.id, fresh, l.sign);
                out.letters.push_back(first);
                out.letters.push_back(second);
            } else {
                out.letters.push_back(l);
            }
        }
    };

    auto [a_first, a_second] = split_block(a, a2, eps);
    auto [b_first, b_second] = split_block(b, b2, delta);
    auto [c_first, c_second] = split_block(c, c2, psi);

    // cyclically: U4 U1 | a_i d' e b_l | U3 | c_m f' d a_j | U2 | b_k e' f c_p
    SignedWord out;
    out.letters.reserve(static_cast<size_t>(n) + 12);
    copy_segment(out, pc, pa); // U4 U1
    out.letters.push_back(a_first);
    out.letters.push_back(Letter{d, -1});
    out.letters.push_back(Letter{e, +1});
    out.letters.push_back(b_second);
    copy_segment(out, pb, pc); // U3
    out.letters.push_back(c_first);
    out.letters.push_back(Letter{f, -1});
    out.letters.push_back(Letter{d, +1});
    out.letters.push_back(a_second);
    copy_segment(out, pa, pb); // U2
    out.letters.push_back(b_first);
    out.letters.push_back(Letter{e, -1});
    out.letters.push_back(Letter{f, +1});
    out.letters.push_back(c_second);
    return out;
}

SignedWord apply_transform(const SignedWord& w, const TransformSite& site) {
    switch (site.kind) {
        case TransformKind::alpha: return apply_alpha(w, site);
        case TransformKind::beta: return apply_beta(w, site);
        case TransformKind::gamma: return apply_gamma(w, site);
    }
    throw BadSite("unknown transformation kind");
}

std::vector<TransformSite> all_sites(const SignedWord& w) {
    std::vector<int> ids;
    for (const Letter& l : w.letters)
        if (std::find(ids.begin(), ids.end(), l.id) == ids.end()) ids.push_back(l.id);
    std::sort(ids.begin(), ids.end());

    // chosen-occurrence positions, for the gamma cyclic-order precheck
    std::map<std::pair<int, int>, int> pos_of; // (id, sign) -> position
    for (int i = 0; i < w.size(); ++i) pos_of[{w[i].id, w[i].sign}] = i;

    std::vector<TransformSite> sites;
    for (int a : ids)
        for (int sa : {+1, -1})
            sites.push_back({TransformKind::alpha, {a, -1, -1}, {sa, +1, +1}});

    for (int a : ids)
        for (int b : ids) {
            if (a == b) continue;
            for (int sa : {+1, -1})
                for (int sb : {+1, -1})
                    sites.push_back({TransformKind::beta, {a, b, -1}, {sa, sb, +1}});
        }

    int n = w.size();
    for (int a : ids)
        for (int b : ids)
            for (int c : ids) {
                if (a == b || a == c || b == c) continue;
                for (int sa : {+1, -1})
                    for (int sb : {+1, -1})
                        for (int sc : {+1, -1}) {
                            int pa = pos_of.at({a, sa});
                            int pb = pos_of.at({b, sb});
                            int pc = pos_of.at({c, sc});
                            int rb = ((pb - pa) % n + n) % n;
                            int rc = ((pc - pa) % n + n) % n;
                            if (!(0 < rb && rb < rc)) continue;
                            sites.push_back({TransformKind::gamma, {a, b, c}, {sa, sb, sc}});
                        }
            }
    return sites;
}

namespace {

// A balanced word (each letter once with each sign) of length 12h-6 is a
// genus-h Wicks form exactly when every rotation cycle has length 3: degree-1
// and degree-2 vertices are the spurs and reducible pairs, and for a cubic
// one-face word the Euler genus matches the length automatically.
bool is_cubic_boundary(const SignedWord& w, std::vector<int>& succ, std::vector<int>& rot) {
    int n = w.size();
    succ.assign(static_cast<size_t>(2 * (w.max_id() + 1)), -1);
    rot.assign(succ.size(), -1);
    auto he = [](Letter l) { return 2 * l.id + (l.sign < 0 ? 1 : 0); };
    for (int i = 0; i < n; ++i) succ[static_cast<size_t>(he(w[i]))] = he(w.cyc(i + 1));
    for (int i = 0; i < n; ++i) {
        int x = he(w[i]);
        rot[static_cast<size_t>(x)] = succ[static_cast<size_t>(x ^ 1)];
    }
    for (int i = 0; i < n; ++i) {
        int x = he(w[i]);
        int y = rot[static_cast<size_t>(x)];
        int z = rot[static_cast<size_t>(y)];
        if (y == x || z == x) return false;        // degree 1 or 2
        if (rot[static_cast<size_t>(z)] != x) return false; // degree > 3
    }
    return true;
}

// Generalized genus-raising surgery: split k letters (k = 1..4) and spread
// the remaining 6-k fresh letters' occurrences over the 2k slots between the
// split halves, in every arrangement. The alpha/beta fragment insertions are
// the one-slot-per-letter special cases; gamma images are also reachable this
// way from some parent. Keeping every valid arrangement makes the level step
// exhaustive, which the census identities and the backtracking oracle check.
struct SlotExpander {
    const SignedWord& parent;
    std::map<std::string, CanonicalClass>& out;

    int n;
    int base_id;
    std::vector<int> split_ids;
    std::vector<std::vector<Letter>> slots; // 2k slots: +, - per split id
    std::vector<int> scratch_succ, scratch_rot;

    SlotExpander(const SignedWord& p, std::map<std::string, CanonicalClass>& o)
        : parent(p), out(o), n(p.size()), base_id(p.max_id()) {}

    void emit_candidate() {
        SignedWord child;
        child.letters.reserve(static_cast<size_t>(n + 12));
        for (int p = 0; p < n; ++p) {
            Letter l = parent[p];
            auto it = std::find(split_ids.begin(), split_ids.end(), l.id);
            if (it == split_ids.end()) {
                child.letters.push_back(l);
                continue;
            }
            size_t which = static_cast<size_t>(it - split_ids.begin());
            int second_id = base_id + 1 + static_cast<int>(which);
            const std::vector<Letter>& chunk = slots[2 * which + (l.sign < 0 ? 1 : 0)];
            if (l.sign > 0) {
                child.letters.push_back(Letter{l.id, +1});
                child.letters.insert(child.letters.end(), chunk.begin(), chunk.end());
                child.letters.push_back(Letter{second_id, +1});
            } else {
                child.letters.push_back(Letter{second_id, -1});
                child.letters.insert(child.letters.end(), chunk.begin(), chunk.end());
                child.letters.push_back(Letter{l.id, -1});
            }
        }
        if (!is_cubic_boundary(child, scratch_succ, scratch_rot)) return;
        CanonicalClass cls = canonicalize(child);
        out.try_emplace(to_string(cls.canon), std::move(cls));
    }

    // walk the slots left to right; at each step either close the current
    // slot or append one occurrence: a fresh letter (first occurrence kept
    // positive, sign flips being equivalences) or the partner of an open one
    void fill(size_t slot, int remaining, int fresh_total, std::vector<Letter>& open,
              int& next_fresh, int fresh_base) {
        if (slot == slots.size()) {
            if (remaining == 0 && open.empty()) emit_candidate();
            return;
        }
        fill(slot + 1, remaining, fresh_total, open, next_fresh, fresh_base);
        if (remaining == 0) return;
        for (size_t oi = 0; oi < open.size(); ++oi) {
            Letter saved = open[oi];
            open.erase(open.begin() + static_cast<long>(oi));
            slots[slot].push_back(inverse(saved));
            fill(slot, remaining - 1, fresh_total, open, next_fresh, fresh_base);
            slots[slot].pop_back();
            open.insert(open.begin() + static_cast<long>(oi), saved);
        }
        if (next_fresh < fresh_total) {
            Letter fresh{fresh_base + next_fresh, +1};
            open.push_back(fresh);
            ++next_fresh;
            slots[slot].push_back(fresh);
            fill(slot, remaining - 1, fresh_total, open, next_fresh, fresh_base);
            slots[slot].pop_back();
            --next_fresh;
            open.pop_back();
        }
    }
};

void expand_parent(const SignedWord& parent, std::map<std::string, CanonicalClass>& out) {
    // the transformations as written, at every site
    for (const TransformSite& site : all_sites(parent)) {
        SignedWord child = apply_transform(parent, site);
        std::vector<int> succ, rot;
        if (!is_cubic_boundary(child, succ, rot)) continue;
        CanonicalClass cls = canonicalize(child);
        out.try_emplace(to_string(cls.canon), std::move(cls));
    }
    // every slot-confined surgery
    std::vector<int> ids;
    for (const Letter& l : parent.letters)
        if (std::find(ids.begin(), ids.end(), l.id) == ids.end()) ids.push_back(l.id);
    std::sort(ids.begin(), ids.end());

    for (int k = 1; k <= 4 && k <= static_cast<int>(ids.size()); ++k) {
        std::vector<int> pick(ids.size(), 0);
        std::fill(pick.end() - k, pick.end(), 1);
        std::sort(pick.begin(), pick.end());
        // iterate k-subsets of ids via the marker permutation
        do {
            SlotExpander ex{parent, out};
            for (size_t i = 0; i < ids.size(); ++i)
                if (pick[i]) ex.split_ids.push_back(ids[i]);
            ex.slots.assign(static_cast<size_t>(2 * k), {});
            std::vector<Letter> open;
            int next_fresh = 0;
            ex.fill(0, 2 * (6 - k), 6 - k, open, next_fresh, ex.base_id + k + 1);
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
}

} // namespace

std::vector<CanonicalClass> enumerate_genus(int g, const EnumerateOptions& opts) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    if (g > opts.genus_limit)
        throw LimitExceeded("genus " + std::to_string(g) + " exceeds the configured limit " +
                            std::to_string(opts.genus_limit));

    std::vector<CanonicalClass> level;
    level.push_back(canonicalize(parse_word("a b c a' b' c'")));

    for (int lvl = 2; lvl <= g; ++lvl) {
        int nthreads = std::max(1, opts.threads);
        nthreads = std::min<int>(nthreads, static_cast<int>(level.size()));

        std::vector<std::map<std::string, CanonicalClass>> partial(static_cast<size_t>(nthreads));
        auto work = [&](int t) {
            for (size_t i = static_cast<size_t>(t); i < level.size(); i += static_cast<size_t>(nthreads))
                expand_parent(level[i].canon, partial[static_cast<size_t>(t)]);
        };
        if (nthreads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(nthreads));
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
            for (std::thread& th : pool) th.join();
        }

        // order-independent set union keyed by canonical form
        std::map<std::string, CanonicalClass> merged;
        for (auto& part : partial)
            for (auto& [key, cls] : part) merged.try_emplace(key, std::move(cls));

        level.clear();
        level.reserve(merged.size());
        for (auto& [key, cls] : merged) level.push_back(std::move(cls));
    }
    return level;
}

} // namespace wicks
