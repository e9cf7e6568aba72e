/*
   Copyright 2026 The skein Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "chebyshev.hpp"

#include <mutex>
#include <vector>

#include "error.hpp"

namespace skein {

namespace {

IntPolynomial shift_up(const IntPolynomial& p) {
    IntPolynomial result;
    for (const auto& [e, c] : p) result.emplace(e + 1, c);
    return result;
}

IntPolynomial subtract(IntPolynomial a, const IntPolynomial& b) {
    for (const auto& [e, c] : b) {
        auto [it, inserted] = a.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) a.erase(it);
        }
    }
    return a;
}

IntPolynomial negate(const IntPolynomial& p) {
    IntPolynomial result;
    for (const auto& [e, c] : p) result.emplace(e, -c);
    return result;
}

// Table of T_n / S_n for n >= 0, grown on demand under a lock.
class Family {
  public:
    explicit Family(Integer seed) { table_.push_back({{0, std::move(seed)}}); }

    const IntPolynomial& at(long n) {
        std::lock_guard<std::mutex> guard(mutex_);
        if (table_.size() == 1) table_.push_back({{1, Integer(1)}}); // x
        while (static_cast<long>(table_.size()) <= n) {
            const IntPolynomial& prev = table_[table_.size() - 1];
            const IntPolynomial& prev2 = table_[table_.size() - 2];
            table_.push_back(subtract(shift_up(prev), prev2));
        }
        return table_[static_cast<size_t>(n)];
    }

  private:
    std::mutex mutex_;
    std::vector<IntPolynomial> table_;
};

} // namespace

const IntPolynomial& chebyshev(ChebyshevKind kind, long n) {
    static Family t_family{Integer(2)};
    static Family s_family{Integer(1)};
    if (kind == ChebyshevKind::T) {
        return t_family.at(n < 0 ? -n : n); // T_{-n} = T_n
    }
    if (n >= 0) return s_family.at(n);
    // S_{-k} = -S_{k-2}; S_{-1} = 0 falls out as the k = 1 case.
    const long k = -n;
    if (k == 1) {
        static const IntPolynomial zero;
        return zero;
    }
    // Negations are memoized separately so the returned reference stays valid.
    static std::mutex neg_mutex;
    static std::map<long, IntPolynomial> neg_table;
    std::lock_guard<std::mutex> guard(neg_mutex);
    auto it = neg_table.find(k - 2);
    if (it == neg_table.end()) it = neg_table.emplace(k - 2, negate(s_family.at(k - 2))).first;
    return it->second;
}

std::map<long, Integer> t_in_s_basis(long n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "t_in_s_basis requires n >= 0");
    std::map<long, Integer> result;
    if (n == 0) {
        result[0] = 2; // T_0 = S_0 - S_{-2} = 2 S_0
    } else if (n == 1) {
        result[1] = 1; // S_{-1} = 0
    } else {
        result[n] = 1;
        result[n - 2] = -1;
    }
    return result;
}

} // namespace skein
