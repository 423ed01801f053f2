#include "hurwitz/core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace hurwitz {

std::string to_string(const ExactRational& q) {
    ExactRational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

ExactRational parse_rational(const std::string& s) {
    ExactRational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ParseError("partition must have at least one part");
    for (int p : parts_)
        if (p < 1) throw ParseError("partition parts must be positive");
}

int Partition::degree() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::sub(const std::vector<int>& idx) const {
    std::vector<int> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(parts_.at(i));
    return Partition(std::move(out));
}

Partition Partition::sorted_desc() const {
    auto v = parts_;
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

Partition Partition::ones(int d) { return Partition(std::vector<int>(d, 1)); }

HurwitzType::HurwitzType(int g, Partition m, Partition n, PrunedSide side)
    : genus(g), mu(std::move(m)), nu(std::move(n)), pruned_side(side) {
    if (g < 0) throw ParseError("genus must be non-negative");
    if (mu.degree() != nu.degree()) throw ParseError("mu and nu must have the same degree");
}

HurwitzType HurwitzType::normalized() const {
    return HurwitzType(genus, mu.sorted_desc(), nu.sorted_desc(), pruned_side);
}

int branch_count(int g, int len_mu, int len_nu) { return 2 * g - 2 + len_mu + len_nu; }

int branch_count(const HurwitzType& t) { return branch_count(t.genus, t.mu.length(), t.nu.length()); }

BigInt factorial(int n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt partition_automorphisms(const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    BigInt r = 1;
    for (auto [v, c] : mult) r *= factorial(c);
    return r;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string to_string(const HurwitzType& t) {
    return "g=" + std::to_string(t.genus) + ";mu=" + join_ints(t.mu.parts()) + ";nu=" + join_ints(t.nu.parts());
}

namespace {

int parse_int(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a non-negative integer, got '" + s + "'");
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw ParseError("integer out of range: '" + s + "'");
    }
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok));
    if (out.empty() || s.back() == ',') throw ParseError("bad part list '" + s + "'");
    return out;
}

}  // namespace

HurwitzType parse_type(const std::string& s) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ';')) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value in '" + field + "'");
        auto key = field.substr(0, eq);
        if (kv.count(key)) throw ParseError("duplicate key '" + key + "'");
        kv[key] = field.substr(eq + 1);
    }
    if (kv.size() != 3 || !kv.count("g") || !kv.count("mu") || !kv.count("nu"))
        throw ParseError("type must be of the form g=G;mu=...;nu=...");
    return HurwitzType(parse_int(kv["g"]), Partition(parse_list(kv["mu"])), Partition(parse_list(kv["nu"])));
}

std::vector<std::vector<int>> partitions_of(int d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (static_cast<int>(cur.size()) == k) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int left = k - static_cast<int>(cur.size());
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            if (p * left < rem) break;
            if (rem - p < left - 1) continue;
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (d >= 1 && k >= 1) rec(d, d);
    return out;
}

std::vector<std::vector<int>> partitions_of(int d) {
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= d; ++k)
        for (auto& p : partitions_of(d, k)) out.push_back(p);
    return out;
}

}  // namespace hurwitz
