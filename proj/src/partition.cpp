#include "wreathgen/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wreathgen/error.hpp"

namespace wreathgen {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw Error("bad-partition", "parts must be weakly decreasing and positive");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (part(i) < other.part(i)) return false;
    return true;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return parts_ <=> o.parts_;
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(static_cast<size_t>(p.part(0)));
    for (int j = 0; j < p.part(0); ++j) {
        int h = 0;
        while (h < p.length() && p.part(h) > j) ++h;
        cols.push_back(h);
    }
    return Partition(std::move(cols));
}

Partition hook(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1)
        throw Error("invalid-hook", "need 0 <= k <= n-1, got n=" + std::to_string(n) +
                                        " k=" + std::to_string(k));
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), static_cast<size_t>(k), 1);
    return Partition(std::move(parts));
}

Partition two_row(int n, int k) {
    if (n < 1 || k < 0 || k > n - k)
        throw Error("invalid-two-row", "need 0 <= k <= n-k, got n=" + std::to_string(n) +
                                           " k=" + std::to_string(k));
    if (k == 0) return Partition({n});
    return Partition({n - k, k});
}

Int hook_length_product(const Partition& p) {
    Partition q = conjugate(p);
    Int prod = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) prod *= (p.part(i) - j) + (q.part(j) - i) - 1;
    return prod;
}

Int standard_tableau_count(const Partition& p) {
    return exact_div(factorial(p.size()), hook_length_product(p));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

int MultiPartition::total() const {
    int t = 0;
    for (const auto& p : comps_) t += p.size();
    return t;
}

std::strong_ordering MultiPartition::operator<=>(const MultiPartition& o) const {
    if (auto c = total() <=> o.total(); c != 0) return c;
    return comps_ <=> o.comps_;
}

std::string MultiPartition::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) os << '|';
        os << comps_[i].str();
    }
    os << ']';
    return os.str();
}

std::optional<MultiPartition> pad(const MultiPartition& stable_label, int n) {
    int first = n - stable_label.total();
    if (first < stable_label.at(0).part(0)) return std::nullopt;
    MultiPartition out = stable_label;
    std::vector<int> unit;
    if (first > 0) unit.push_back(first);
    for (int p : stable_label.at(0).parts()) unit.push_back(p);
    out.at(0) = Partition(std::move(unit));
    return out;
}

MultiPartition strip_first_row(const MultiPartition& label) {
    MultiPartition out = label;
    std::vector<int> unit(label.at(0).parts());
    if (!unit.empty()) unit.erase(unit.begin());
    out.at(0) = Partition(std::move(unit));
    return out;
}

std::vector<MultiPartition> multipartitions_of(int n, int num_components) {
    std::vector<MultiPartition> out;
    std::vector<Partition> cur(static_cast<size_t>(num_components));
    auto rec = [&](auto&& self, int slot, int rest) -> void {
        if (slot == num_components) {
            if (rest == 0) out.emplace_back(cur);
            return;
        }
        if (slot == num_components - 1) {
            for (auto& p : partitions_of(rest)) {
                cur[static_cast<size_t>(slot)] = p;
                self(self, slot + 1, 0);
            }
            cur[static_cast<size_t>(slot)] = Partition();
            return;
        }
        for (int a = 0; a <= rest; ++a)
            for (auto& p : partitions_of(a)) {
                cur[static_cast<size_t>(slot)] = p;
                self(self, slot + 1, rest - a);
            }
        cur[static_cast<size_t>(slot)] = Partition();
    };
    if (n >= 0 && num_components >= 1) rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(s);
    while (std::getline(is, token, ',')) {
        // tolerate surrounding whitespace
        size_t a = token.find_first_not_of(" \t");
        size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        token = token.substr(a, b - a + 1);
        try {
            size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw Error("bad-partition", "cannot parse part '" + token + "'");
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error&) {
        throw Error("bad-partition", "'" + s + "' is not weakly decreasing");
    }
}

MultiPartition parse_multipartition(const std::string& s, int num_components) {
    std::string body = s;
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);
    std::vector<Partition> comps;
    size_t start = 0;
    while (true) {
        size_t bar = body.find('|', start);
        std::string piece =
            bar == std::string::npos ? body.substr(start) : body.substr(start, bar - start);
        comps.push_back(parse_partition(piece));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    if (static_cast<int>(comps.size()) != num_components)
        throw Error("bad-label", "label '" + s + "' has " + std::to_string(comps.size()) +
                                     " components, expected " + std::to_string(num_components));
    return MultiPartition(std::move(comps));
}

}  // namespace wreathgen
