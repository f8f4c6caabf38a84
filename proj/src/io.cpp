#include "anst/io.hpp"

#include <algorithm>
#include <cctype>

#include "anst/errors.hpp"

namespace anst {

namespace {

std::string strip(const std::string& s)
{
    auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); });
    return b < e.base() ? std::string(b, e.base()) : std::string();
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        out.push_back(strip(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

long long parse_ll(const std::string& tok)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        require(used == tok.size(), "bad integer: '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        throw PreconditionError("bad integer: '" + tok + "'");
    }
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::string t = strip(text);
    std::vector<int> out;
    if (t == "-" || t.empty()) return out;
    for (const auto& tok : split(t, ',')) out.push_back(static_cast<int>(parse_ll(tok)));
    return out;
}

} // namespace

Permutation parse_permutation(const std::string& text, std::optional<int> n)
{
    std::string t = strip(text);
    require(!t.empty(), "empty permutation");
    Permutation p;
    if (t.front() == '[') {
        require(t.back() == ']', "unterminated one-line permutation: " + t);
        p = Permutation::from_one_line(parse_int_list(t.substr(1, t.size() - 2)));
    } else if (t == "e" || t == "1") {
        require(n.has_value(), "the identity needs an explicit rank (--n)");
        p = Permutation::identity(*n);
    } else {
        std::vector<int> letters;
        for (const auto& tok : split(t, '*')) {
            require(tok.size() >= 2 && tok.front() == 's', "bad reflection '" + tok + "' in " + t);
            letters.push_back(static_cast<int>(parse_ll(tok.substr(1))));
        }
        int rank = n ? *n : *std::max_element(letters.begin(), letters.end()) + 1;
        p = Permutation::from_word(rank, letters);
    }
    require(!n || p.rank() == *n, "permutation rank " + std::to_string(p.rank()) +
                                      " does not match n=" + std::to_string(*n));
    return p;
}

MultiWeylElement parse_multi(const std::string& text, std::optional<int> n)
{
    std::vector<Permutation> comps;
    for (const auto& part : split(text, ';')) comps.push_back(parse_permutation(part, n));
    for (const auto& c : comps) require(c.rank() == comps.front().rank(), "component rank mismatch");
    return MultiWeylElement(std::move(comps));
}

SimpleRootSet parse_root_set(const std::string& text, int n)
{
    return SimpleRootSet(n, parse_int_list(text));
}

BlockSet parse_block_set(const std::string& text, int r, int k)
{
    return BlockSet(r, k, parse_int_list(text));
}

IntegralWeight parse_weight(const std::string& text)
{
    IntegralWeight w;
    for (const auto& row : split(text, ';')) {
        std::vector<long long> entries;
        for (const auto& tok : split(row, ',')) entries.push_back(parse_ll(tok));
        if (w.rows.empty()) w.n = static_cast<int>(entries.size());
        require(static_cast<int>(entries.size()) == w.n, "ragged weight");
        w.rows.push_back(std::move(entries));
    }
    require(w.n >= 1, "empty weight");
    return w;
}

std::string word_str(const std::vector<int>& letters)
{
    if (letters.empty()) return "e";
    std::string s;
    for (int a : letters) {
        if (!s.empty()) s += '*';
        s += "s" + std::to_string(a);
    }
    return s;
}

} // namespace anst
