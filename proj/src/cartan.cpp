#include "hopfrob/cartan.hpp"

#include <set>
#include <stdexcept>

#include "hopfrob/builders.hpp"
#include "hopfrob/parallel.hpp"

namespace hopfrob {

namespace {

IntMatrix chain(int n) {
    IntMatrix c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
}

void link(IntMatrix& c, int i, int j) { c[i][j] = c[j][i] = -1; }

// Fraction-free elimination; exact for the small integer matrices used here.
long long determinant(IntMatrix m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    long long prev = 1, sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

int mod(long long v, int ell) { return static_cast<int>(((v % ell) + ell) % ell); }

}  // namespace

IntMatrix cartan_matrix(char type, int rank) {
    auto bad = [&] { throw std::invalid_argument(std::string("no Cartan type ") + type + std::to_string(rank)); };
    if (rank < 1) bad();
    IntMatrix c;
    switch (type) {
        case 'A':
            c = chain(rank);
            break;
        case 'B':
            if (rank < 2) bad();
            c = chain(rank);
            c[rank - 2][rank - 1] = -2;
            break;
        case 'C':
            if (rank < 2) bad();
            c = chain(rank);
            c[rank - 1][rank - 2] = -2;
            break;
        case 'D':
            if (rank < 4) bad();
            c = chain(rank);
            c[rank - 2][rank - 1] = c[rank - 1][rank - 2] = 0;
            link(c, rank - 3, rank - 1);
            break;
        case 'E': {
            if (rank < 6 || rank > 8) bad();
            // Bourbaki: chain 1-3-4-5-6-7-8 with 2 attached to 4.
            c = IntMatrix(rank, std::vector<int>(rank, 0));
            for (int i = 0; i < rank; ++i) c[i][i] = 2;
            link(c, 0, 2);
            link(c, 1, 3);
            for (int i = 2; i + 1 < rank; ++i) link(c, i, i + 1);
            break;
        }
        case 'F':
            if (rank != 4) bad();
            c = chain(4);
            c[1][2] = -2;
            break;
        case 'G':
            if (rank != 2) bad();
            c = {{2, -1}, {-3, 2}};
            break;
        default:
            bad();
    }
    return c;
}

bool is_finite_type_cartan(const IntMatrix& c) {
    const int n = static_cast<int>(c.size());
    if (n == 0) return false;
    for (const auto& row : c)
        if (static_cast<int>(row.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && c[i][j] != 2) return false;
            if (i != j && (c[i][j] > 0 || (c[i][j] == 0) != (c[j][i] == 0))) return false;
        }
    for (int k = 1; k <= n; ++k) {
        IntMatrix lead(k, std::vector<int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead[i][j] = c[i][j];
        if (determinant(lead) <= 0) return false;
    }
    return true;
}

CartanDatum cartan_datum(char type, int rank, int ell, unsigned J) {
    if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("ell must be odd and at least 3");
    CartanDatum d;
    d.type = type;
    d.rank = rank;
    d.C = cartan_matrix(type, rank);
    d.ell = ell;
    d.J = J;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        d.sigma.push_back(e);
    }
    return d;
}

bool sigma_contains_generators(const CartanDatum& d) {
    // Closure of sigma under addition in (Z_ell)^rank.
    std::set<std::vector<int>> group{std::vector<int>(d.rank, 0)};
    std::vector<std::vector<int>> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& s : d.sigma) {
                std::vector<int> h(d.rank);
                for (int i = 0; i < d.rank; ++i) h[i] = mod(g[i] + s[i], d.ell);
                if (group.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    for (int i = 0; i < d.rank; ++i) {
        if (!(((d.I_plus | d.I_minus) >> i) & 1u)) continue;
        std::vector<int> e(d.rank, 0);
        e[i] = 1 % d.ell;
        if (!group.count(e)) return false;
    }
    return true;
}

std::vector<int> row_sums_mod(const IntMatrix& c, unsigned J, int ell) {
    std::vector<int> out;
    for (const auto& row : c) {
        long long s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += ((J >> j) & 1u) ? -row[j] : row[j];
        out.push_back(mod(s, ell));
    }
    return out;
}

RowSumScan cartan_row_sum_check(const CartanDatum& datum) {
    if (!is_finite_type_cartan(datum.C)) throw std::invalid_argument("not a finite-type Cartan matrix: " + datum.label());
    RowSumScan scan;
    scan.label = datum.label();
    scan.ell = datum.ell;
    auto all_zero = [](const std::vector<int>& v) {
        for (int x : v)
            if (x != 0) return false;
        return true;
    };
    scan.plain_row_sums = row_sums_mod(datum.C, 0, datum.ell);
    scan.plain_all_zero = all_zero(scan.plain_row_sums);
    const unsigned subsets = 1u << datum.C.size();
    for (unsigned J = 0; J < subsets; ++J)
        if (all_zero(row_sums_mod(datum.C, J, datum.ell))) scan.zero_subsets.push_back(J);
    return scan;
}

Report cartan_row_sum_report(const std::vector<RowSumScan>& scans) {
    Report rep;
    rep.title = "cartan row sums";
    for (const auto& s : scans) {
        std::string sums;
        for (int x : s.plain_row_sums) sums += (sums.empty() ? "" : ",") + std::to_string(x);
        std::string zs;
        for (unsigned J : s.zero_subsets) zs += (zs.empty() ? "J=" : ";") + std::to_string(J);
        rep.add(s.label + "_l" + std::to_string(s.ell), !s.any_all_zero(), zs.empty() ? "plain" : zs, "cartan.row_sums",
                "row_sums=(" + sums + ")");
    }
    return rep;
}

std::vector<std::pair<char, int>> small_rank_types() {
    return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
            {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}};
}

std::string UnimodularityRow::label() const {
    return std::string("(") + (e_in ? "{1}" : "{}") + "," + (f_in ? "{1}" : "{}") + ")";
}

std::vector<UnimodularityRow> unimodularity_scan_sl2(int ell) {
    HopfPtr u = small_quantum_sl2(ell);
    std::vector<UnimodularityRow> rows(4);
    parallel_for(4, [&](int c) {
        UnimodularityRow& r = rows[c];
        r.e_in = c & 1;
        r.f_in = c & 2;
        r.predicted = r.e_in == r.f_in;
        r.asserted = ell > 3 || r.predicted;
        r.unimodular = is_unimodular(*sl2_subalgebra(u, ell, r.e_in, r.f_in).K);
    });
    return rows;
}

}  // namespace hopfrob
