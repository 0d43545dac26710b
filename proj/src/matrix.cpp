#include "qalg/matrix.hpp"

#include "qalg/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace qalg {

MatrixQ::MatrixQ(int rows, int cols) : cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("MatrixQ: negative dimension");
    rows_.resize(static_cast<size_t>(rows));
}

Rational MatrixQ::get(int r, int c) const
{
    const SparseRow& row = rows_.at(static_cast<size_t>(r));
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c)
        return it->second;
    return Rational(0);
}

void MatrixQ::set(int r, int c, const Rational& v)
{
    if (c < 0 || c >= cols_)
        throw std::out_of_range("MatrixQ::set: column out of range");
    SparseRow& row = rows_.at(static_cast<size_t>(r));
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    }
    else if (v != 0) {
        row.insert(it, {c, v});
    }
}

void MatrixQ::set_row(int i, SparseRow row)
{
    rows_.at(static_cast<size_t>(i)) = std::move(row);
}

void MatrixQ::append_row(SparseRow row)
{
    rows_.push_back(std::move(row));
}

namespace {

// cur -= cur[pos].second * pivot, where pivot.front() == (cur[pos].first, 1).
// Entries before pos are untouched; the entry at pos cancels exactly.
void eliminate_at(SparseRow& cur, size_t pos, const SparseRow& pivot)
{
    const Rational coef = cur[pos].second;
    SparseRow merged;
    merged.reserve(cur.size() + pivot.size());
    for (size_t t = 0; t < pos; ++t)
        merged.push_back(std::move(cur[t]));
    size_t i = pos, j = 0;
    while (i < cur.size() && j < pivot.size()) {
        if (cur[i].first < pivot[j].first) {
            merged.push_back(std::move(cur[i++]));
        }
        else if (cur[i].first > pivot[j].first) {
            merged.emplace_back(pivot[j].first, -coef * pivot[j].second);
            ++j;
        }
        else {
            Rational v = cur[i].second - coef * pivot[j].second;
            if (v != 0)
                merged.emplace_back(cur[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < cur.size(); ++i)
        merged.push_back(std::move(cur[i]));
    for (; j < pivot.size(); ++j)
        merged.emplace_back(pivot[j].first, -coef * pivot[j].second);
    cur = std::move(merged);
}

// Echelon store: normalized pivot rows in insertion order plus a column index.
struct Echelon {
    std::vector<SparseRow> rows;
    std::unordered_map<int, int> by_col;  // pivot column -> row index
};

SparseRow reduce_row(SparseRow row, const Echelon& ech)
{
    size_t i = 0;
    while (i < row.size()) {
        auto it = ech.by_col.find(row[i].first);
        if (it == ech.by_col.end()) {
            ++i;
            continue;
        }
        eliminate_at(row, i, ech.rows[static_cast<size_t>(it->second)]);
    }
    return row;
}

void insert_row(Echelon& ech, SparseRow row)
{
    if (row.empty())
        return;
    const Rational lead = row.front().second;
    if (lead != 1)
        for (auto& e : row)
            e.second /= lead;
    ech.by_col.emplace(row.front().first, static_cast<int>(ech.rows.size()));
    ech.rows.push_back(std::move(row));
}

Echelon echelon_serial(const MatrixQ& m)
{
    Echelon ech;
    for (int i = 0; i < m.rows(); ++i)
        insert_row(ech, reduce_row(m.row(i), ech));
    return ech;
}

Echelon echelon_parallel(const MatrixQ& m)
{
    // Chunked elimination: each chunk is pre-reduced against the pivots known
    // so far in parallel, then inserted serially. The residual of a row
    // modulo a pivot set is unique, so the grouping cannot change the result.
    constexpr int kChunk = 64;
    Echelon ech;
    const int n = m.rows();
    std::vector<SparseRow> pre(kChunk);
    for (int base = 0; base < n; base += kChunk) {
        const int k = std::min(kChunk, n - base);
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < k; ++t)
            pre[static_cast<size_t>(t)] = reduce_row(m.row(base + t), ech);
        for (int t = 0; t < k; ++t)
            insert_row(ech, reduce_row(std::move(pre[static_cast<size_t>(t)]), ech));
    }
    return ech;
}

// Eliminates every foreign pivot column from row; own_col stays untouched
// because every pivot row leads with 1 in its own column and the merges only
// introduce columns to the right of the one being cleared.
SparseRow back_substitute(SparseRow row, int own_col, const Echelon& ech)
{
    size_t i = 0;
    while (i < row.size()) {
        const int c = row[i].first;
        auto it = ech.by_col.find(c);
        if (c != own_col && it != ech.by_col.end())
            eliminate_at(row, i, ech.rows[static_cast<size_t>(it->second)]);
        else
            ++i;
    }
    return row;
}

RrefResult finish_rref(const MatrixQ& m, const Echelon& ech, bool parallel)
{
    const int r = static_cast<int>(ech.rows.size());
    std::vector<SparseRow> reduced(static_cast<size_t>(r));
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < r; ++i)
            reduced[static_cast<size_t>(i)] =
                back_substitute(ech.rows[static_cast<size_t>(i)],
                                ech.rows[static_cast<size_t>(i)].front().first, ech);
    }
    else {
        for (int i = 0; i < r; ++i)
            reduced[static_cast<size_t>(i)] =
                back_substitute(ech.rows[static_cast<size_t>(i)],
                                ech.rows[static_cast<size_t>(i)].front().first, ech);
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });

    RrefResult out;
    out.rank = r;
    out.rref = MatrixQ(m.rows(), m.cols());
    out.pivot_cols.reserve(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        out.pivot_cols.push_back(reduced[static_cast<size_t>(i)].front().first);
        out.rref.set_row(i, std::move(reduced[static_cast<size_t>(i)]));
    }
    return out;
}

}  // namespace

RrefResult rref_serial(const MatrixQ& m)
{
    return finish_rref(m, echelon_serial(m), false);
}

RrefResult rref_parallel(const MatrixQ& m)
{
    return finish_rref(m, echelon_parallel(m), true);
}

RrefResult rref(const MatrixQ& m)
{
    return parallel_enabled() ? rref_parallel(m) : rref_serial(m);
}

int rank(const MatrixQ& m)
{
    Echelon ech = parallel_enabled() ? echelon_parallel(m) : echelon_serial(m);
    return static_cast<int>(ech.rows.size());
}

MatrixQ orthogonal_complement(const MatrixQ& rows)
{
    if (rows.cols() < 1)
        throw std::invalid_argument("orthogonal_complement: need at least one column");
    const RrefResult r = rref(rows);

    std::vector<bool> is_pivot(static_cast<size_t>(rows.cols()), false);
    for (int c : r.pivot_cols)
        is_pivot[static_cast<size_t>(c)] = true;

    // One generator per free column f: 1 at f, -rref[i][f] at pivot_cols[i].
    std::unordered_map<int, SparseRow> gen;
    for (int c = 0; c < rows.cols(); ++c)
        if (!is_pivot[static_cast<size_t>(c)])
            gen[c] = {{c, Rational(1)}};
    for (int i = 0; i < r.rank; ++i) {
        const int pc = r.pivot_cols[static_cast<size_t>(i)];
        for (const auto& [c, v] : r.rref.row(i))
            if (!is_pivot[static_cast<size_t>(c)])
                gen[c].emplace_back(pc, -v);
    }

    MatrixQ raw(0, rows.cols());
    for (int c = 0; c < rows.cols(); ++c) {
        auto it = gen.find(c);
        if (it == gen.end())
            continue;
        std::sort(it->second.begin(), it->second.end());
        raw.append_row(std::move(it->second));
    }
    // Canonicalize: the generators are independent but not echelonized.
    const RrefResult canon = rref(raw);
    MatrixQ out(canon.rank, rows.cols());
    for (int i = 0; i < canon.rank; ++i)
        out.set_row(i, canon.rref.row(i));
    return out;
}

SparseRow reduce_against(const RrefResult& r, SparseRow v)
{
    Echelon ech;
    for (int i = 0; i < r.rank; ++i) {
        ech.by_col.emplace(r.rref.row(i).front().first, i);
        ech.rows.push_back(r.rref.row(i));
    }
    return reduce_row(std::move(v), ech);
}

bool in_row_space(const RrefResult& r, const SparseRow& v)
{
    return reduce_against(r, v).empty();
}

Rational dot(const SparseRow& a, const SparseRow& b)
{
    Rational acc(0);
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            ++i;
        else if (a[i].first > b[j].first)
            ++j;
        else
            acc += a[i++].second * b[j++].second;
    }
    return acc;
}

}  // namespace qalg
