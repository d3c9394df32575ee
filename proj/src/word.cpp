#include "wicks/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wicks {

SignedWord SignedWord::rotated(int r) const {
    int n = size();
    if (n == 0) return {};
    r = ((r % n) + n) % n;
    std::vector<Letter> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(letters[static_cast<size_t>((i + r) % n)]);
    return SignedWord(std::move(out));
}

int SignedWord::alphabet_size() const {
    std::vector<int> ids;
    ids.reserve(letters.size());
    for (const Letter& l : letters) ids.push_back(l.id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return static_cast<int>(ids.size());
}

int SignedWord::max_id() const {
    int m = -1;
    for (const Letter& l : letters) m = std::max(m, l.id);
    return m;
}

bool word_less(const SignedWord& a, const SignedWord& b) {
    int n = std::min(a.size(), b.size());
    for (int i = 0; i < n; ++i) {
        if (a[i] == b[i]) continue;
        return letter_less(a[i], b[i]);
    }
    return a.size() < b.size();
}

int MultiWord::total_letters() const {
    int t = 0;
    for (const SignedWord& f : faces) t += f.size();
    return t;
}

// --- parsing ----------------------------------------------------------------

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

ParsedWords parse_multiword(std::string_view text) {
    ParsedWords out;
    std::map<std::string, int, std::less<>> ids;

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        SignedWord face;
        size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
            if (!ident_start(c))
                throw MalformedWord("unexpected character '" + std::string(1, c) + "' in word");
            size_t start = i;
            while (i < line.size() && ident_char(line[i])) ++i;
            std::string name(line.substr(start, i - start));
            int sign = 1;
            if (i < line.size() && line[i] == '\'') { sign = -1; ++i; }
            if (i < line.size() && line[i] == '\'')
                throw MalformedWord("token '" + name + "' has more than one apostrophe");

            auto [it, inserted] = ids.try_emplace(name, static_cast<int>(out.names.size()));
            if (inserted) out.names.push_back(name);
            face.letters.push_back(Letter{it->second, sign});
        }
        if (!face.empty()) out.words.faces.push_back(std::move(face));
        if (eol == std::string_view::npos) break;
    }
    return out;
}

SignedWord parse_word(std::string_view text) {
    ParsedWords p = parse_multiword(text);
    if (p.words.faces.size() != 1)
        throw MalformedWord("expected exactly one word, got " + std::to_string(p.words.faces.size()));
    return p.words.faces.front();
}

std::string letter_name(int id) {
    if (id < 0) throw std::invalid_argument("negative letter id");
    if (id < 26) return std::string(1, static_cast<char>('a' + id));
    return "x" + std::to_string(id - 25);
}

namespace {

std::string render(const SignedWord& w, const std::vector<std::string>* names) {
    std::string out;
    for (int i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        const Letter& l = w[i];
        if (names) out += (*names)[static_cast<size_t>(l.id)];
        else out += letter_name(l.id);
        if (l.sign < 0) out += '\'';
    }
    return out;
}

} // namespace

std::string to_string(const SignedWord& w) { return render(w, nullptr); }

std::string to_string(const SignedWord& w, const std::vector<std::string>& names) {
    return render(w, &names);
}

std::string to_string(const MultiWord& m, const std::vector<std::string>& names) {
    std::string out;
    for (const SignedWord& f : m.faces) {
        out += render(f, &names);
        out += '\n';
    }
    return out;
}

// --- validation --------------------------------------------------------------

namespace {

struct Occurrences {
    std::vector<std::vector<int>> pos_by_id; // positions, any sign
};

Occurrences collect(const SignedWord& w) {
    Occurrences occ;
    occ.pos_by_id.resize(static_cast<size_t>(w.max_id() + 1));
    for (int i = 0; i < w.size(); ++i) occ.pos_by_id[static_cast<size_t>(w[i].id)].push_back(i);
    return occ;
}

// All positions of the ids of x and y covered by instances of the subwords
// xy and y^{-1}x^{-1}? (instances cannot overlap when the ids differ)
bool pair_reducible(const SignedWord& w, const Occurrences& occ, Letter x, Letter y) {
    int n = w.size();
    std::vector<char> covered(static_cast<size_t>(n), 0);
    bool any = false;
    for (int i = 0; i < n; ++i) {
        const Letter& u = w[i];
        const Letter& v = w.cyc(i + 1);
        if ((u == x && v == y) || (u == inverse(y) && v == inverse(x))) {
            covered[static_cast<size_t>(i)] = 1;
            covered[static_cast<size_t>((i + 1) % n)] = 1;
            any = true;
        }
    }
    if (!any) return false;
    for (int p : occ.pos_by_id[static_cast<size_t>(x.id)])
        if (!covered[static_cast<size_t>(p)]) return false;
    for (int p : occ.pos_by_id[static_cast<size_t>(y.id)])
        if (!covered[static_cast<size_t>(p)]) return false;
    return true;
}

} // namespace

ValidationReport validate_wicks(const SignedWord& w) {
    ValidationReport rep;
    rep.nonempty = !w.empty();
    if (w.empty()) {
        rep.each_letter_twice = rep.opposite_signs = rep.irreducible = true;
        return rep;
    }

    Occurrences occ = collect(w);
    rep.each_letter_twice = true;
    rep.opposite_signs = true;
    for (size_t id = 0; id < occ.pos_by_id.size(); ++id) {
        const auto& ps = occ.pos_by_id[id];
        if (ps.empty()) continue;
        if (ps.size() != 2) {
            rep.each_letter_twice = false;
            rep.bad_multiplicity_ids.push_back(static_cast<int>(id));
            continue;
        }
        if (w[ps[0]].sign == w[ps[1]].sign) {
            rep.opposite_signs = false;
            rep.same_sign_ids.push_back(static_cast<int>(id));
        }
    }

    rep.irreducible = true;
    int n = w.size();
    for (int i = 0; i < n; ++i) {
        Letter u = w[i];
        Letter v = w.cyc(i + 1);
        if (u.id == v.id) continue;
        // the patterns (u,v) and (v^{-1},u^{-1}) are the same pair; keep the
        // lexicographically smaller key so each is reported once
        Letter a = u, b = v;
        Letter a2 = inverse(v), b2 = inverse(u);
        if (letter_less(a2, a) || (a2 == a && letter_less(b2, b))) {
            a = a2;
            b = b2;
        }
        bool seen = false;
        for (const auto& pr : rep.reducible_pairs)
            if (pr.first == a && pr.second == b) { seen = true; break; }
        if (seen) continue;
        if (pair_reducible(w, occ, a, b)) {
            rep.irreducible = false;
            rep.reducible_pairs.emplace_back(a, b);
        }
    }

    if (n >= 6 && (n + 6) % 12 == 0) rep.length_genus = (n + 6) / 12;
    return rep;
}

SignedWord reduce(const SignedWord& w) {
    {
        Occurrences occ = collect(w);
        for (const auto& ps : occ.pos_by_id)
            if (!ps.empty() && ps.size() != 2)
                throw MalformedWord("letter occurs " + std::to_string(ps.size()) + " times, expected 2");
    }

    SignedWord cur = w;
    for (;;) {
        int n = cur.size();
        int found_i = -1, found_j = -1;
        for (int i = 0; i < n && found_i < 0; ++i) {
            Letter u = cur[i];
            Letter v = cur.cyc(i + 1);
            if (u.id == v.id) continue;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                if (cur[j] == inverse(v) && cur.cyc(j + 1) == inverse(u)) {
                    // both instances present: with each letter appearing twice,
                    // all occurrences of the pair are covered
                    found_i = i;
                    found_j = j;
                    break;
                }
            }
        }
        if (found_i < 0) return cur;

        int n2 = cur.size();
        int drop1 = (found_i + 1) % n2;
        int drop2 = (found_j + 1) % n2;
        int fresh = cur.max_id() + 1;
        std::vector<Letter> next;
        next.reserve(static_cast<size_t>(n2 - 2));
        for (int p = 0; p < n2; ++p) {
            if (p == drop1 || p == drop2) continue;
            if (p == found_i) next.push_back(Letter{fresh, +1});
            else if (p == found_j) next.push_back(Letter{fresh, -1});
            else next.push_back(cur[p]);
        }
        cur = SignedWord(std::move(next));
    }
}

int distance(const SignedWord& w, int i, int j) {
    int n = w.size();
    if (i >= n || j >= n || i < 0 || j < 0)
        throw std::out_of_range("position out of range");
    if (i == j) throw std::invalid_argument("distance requires distinct positions");
    int a = ((j - i) % n + n) % n;
    int b = n - a;
    return std::min(a, b) - 1;
}

} // namespace wicks
