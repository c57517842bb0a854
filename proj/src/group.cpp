#include "wlp/group.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "wlp/error.hpp"

namespace wlp {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::string name)
    : order_(order), table_(std::move(table)), name_(std::move(name)) {
    if (order_ == 0) throw ParameterError("group order must be positive");
    if (table_.size() != order_ * order_)
        throw ParameterError("Cayley table must have order*order entries");
    for (Element v : table_)
        if (v >= order_) throw ParameterError("Cayley table entry out of range");

    // identity: the unique e with e*x = x*e = x for all x
    bool found = false;
    for (Element e = 0; e < order_ && !found; ++e) {
        bool ok = true;
        for (Element x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw ParameterError("Cayley table has no identity element");

    inverses_.assign(order_, order_);
    for (Element x = 0; x < order_; ++x) {
        for (Element y = 0; y < order_; ++y) {
            if (mul(x, y) == identity_ && mul(y, x) == identity_) {
                inverses_[x] = y;
                break;
            }
        }
        if (inverses_[x] == order_)
            throw ParameterError("element " + std::to_string(x) + " has no inverse");
    }

    for (Element x = 0; x < order_; ++x)
        for (Element y = 0; y < order_; ++y)
            for (Element z = 0; z < order_; ++z)
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    throw ParameterError("Cayley table is not associative");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw ParameterError("cyclic group order must be positive");
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) table[x * n + y] = (x + y) % n;
    return FiniteGroup(n, std::move(table), "Z_" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto index_of = [&](const std::array<int, 3>& q) {
        return static_cast<Element>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<Element> table(36);
    for (std::size_t x = 0; x < 6; ++x) {
        for (std::size_t y = 0; y < 6; ++y) {
            // (xy)(i) = x(y(i))
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[x][perms[y][i]];
            table[x * 6 + y] = index_of(c);
        }
    }
    return FiniteGroup(6, std::move(table), "S_3");
}

bool FiniteGroup::is_abelian() const {
    for (Element x = 0; x < order_; ++x)
        for (Element y = x + 1; y < order_; ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

} // namespace wlp
