#include "loopforge/loop.hpp"

#include <fstream>
#include <sstream>

namespace loopforge {

namespace {

// Latin-square validation shared by Quasigroup and FiniteLoop construction.
// Throws LatinViolation naming the first repeated symbol, row-first.
void validate_latin(int n, const std::vector<int>& table) {
    for (int r = 0; r < n; ++r) {
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (int c = 0; c < n; ++c) {
            int v = table[static_cast<size_t>(r) * n + c];
            if (seen[static_cast<size_t>(v)]) throw LatinViolation(true, r, v);
            seen[static_cast<size_t>(v)] = true;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (int r = 0; r < n; ++r) {
            int v = table[static_cast<size_t>(r) * n + c];
            if (seen[static_cast<size_t>(v)]) throw LatinViolation(false, c, v);
            seen[static_cast<size_t>(v)] = true;
        }
    }
}

std::vector<int> flatten_checked(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw ShapeError("empty table");
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw ShapeError("table is not square");
        for (int v : row) {
            if (v < 0 || v >= n) throw ShapeError("table entry out of range 0..n-1");
            flat.push_back(v);
        }
    }
    return flat;
}

std::optional<int> find_identity(int n, const std::vector<int>& table) {
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = table[static_cast<size_t>(e) * n + x] == x &&
                 table[static_cast<size_t>(x) * n + e] == x;
        if (ok) return e;
    }
    return std::nullopt;
}

}  // namespace

Quasigroup Quasigroup::from_rows(const std::vector<std::vector<int>>& rows) {
    Quasigroup q;
    q.table_ = flatten_checked(rows);
    q.n_ = static_cast<int>(rows.size());
    validate_latin(q.n_, q.table_);
    q.identity_ = find_identity(q.n_, q.table_);
    return q;
}

FiniteLoop Quasigroup::as_loop() const {
    if (!identity_) throw Error("quasigroup has no two-sided identity");
    return loop_from_flat(n_, table_);
}

std::vector<std::vector<int>> Quasigroup::rows() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(n_));
    for (int r = 0; r < n_; ++r)
        out[static_cast<size_t>(r)] =
            std::vector<int>(table_.begin() + static_cast<long>(r) * n_,
                             table_.begin() + static_cast<long>(r + 1) * n_);
    return out;
}

FiniteLoop FiniteLoop::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> flat = flatten_checked(rows);
    const int n = static_cast<int>(rows.size());
    return loop_from_flat(n, std::move(flat));
}

void FiniteLoop::finish_construction() {
    validate_latin(n_, table_);
    auto e = find_identity(n_, table_);
    if (!e) throw Error("table has no two-sided identity (not a loop)");
    identity_ = *e;

    inv_rows_.assign(static_cast<size_t>(n_) * n_, 0);
    inv_cols_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            int b = table_[static_cast<size_t>(x) * n_ + y];
            inv_rows_[static_cast<size_t>(x) * n_ + b] = y;  // x*y = b  =>  y = x \ b
            inv_cols_[static_cast<size_t>(y) * n_ + b] = x;  // x*y = b  =>  x = b / y
        }

    std::vector<int> rho(static_cast<size_t>(n_)), lam(static_cast<size_t>(n_));
    for (int x = 0; x < n_; ++x) {
        rho[static_cast<size_t>(x)] = inv_rows_[static_cast<size_t>(x) * n_ + identity_];
        lam[static_cast<size_t>(x)] = inv_cols_[static_cast<size_t>(x) * n_ + identity_];
    }
    j_rho_ = Permutation(std::move(rho));
    j_lambda_ = Permutation(std::move(lam));
}

FiniteLoop loop_from_flat(int n, std::vector<int> table) {
    FiniteLoop L;
    L.n_ = n;
    L.table_ = std::move(table);
    L.finish_construction();
    return L;
}

Permutation FiniteLoop::left_translation(int x) const {
    if (x < 0 || x >= n_) throw std::out_of_range("element index out of range");
    std::vector<int> img(table_.begin() + static_cast<long>(x) * n_,
                         table_.begin() + static_cast<long>(x + 1) * n_);
    return Permutation(std::move(img));
}

Permutation FiniteLoop::right_translation(int x) const {
    if (x < 0 || x >= n_) throw std::out_of_range("element index out of range");
    std::vector<int> img(static_cast<size_t>(n_));
    for (int y = 0; y < n_; ++y) img[static_cast<size_t>(y)] = table_[static_cast<size_t>(y) * n_ + x];
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> FiniteLoop::rows() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(n_));
    for (int r = 0; r < n_; ++r)
        out[static_cast<size_t>(r)] =
            std::vector<int>(table_.begin() + static_cast<long>(r) * n_,
                             table_.begin() + static_cast<long>(r + 1) * n_);
    return out;
}

Quasigroup FiniteLoop::as_quasigroup() const {
    Quasigroup q;
    q.n_ = n_;
    q.table_ = table_;
    q.identity_ = identity_;
    return q;
}

Permutation compose(const Permutation& p, const Permutation& q) { return p.then(q); }

std::pair<Permutation, Permutation> inverse_maps(const FiniteLoop& L) {
    return {L.j_rho(), L.j_lambda()};
}

std::string to_loop_text(const FiniteLoop& L) {
    std::ostringstream os;
    os << L.order() << '\n';
    for (int r = 0; r < L.order(); ++r) {
        for (int c = 0; c < L.order(); ++c) {
            if (c) os << ' ';
            os << L.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

FiniteLoop loop_from_text(const std::string& text) {
    std::istringstream is(text);
    int n = 0;
    if (!(is >> n) || n < 1) throw ShapeError("bad .loop header: expected order n >= 1");
    std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!(is >> rows[static_cast<size_t>(r)][static_cast<size_t>(c)]))
                throw ShapeError("truncated .loop table");
    return FiniteLoop::from_rows(rows);
}

nlohmann::json loop_to_json(const FiniteLoop& L) {
    return nlohmann::json{{"n", L.order()}, {"table", L.rows()}};
}

FiniteLoop loop_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("table")) throw ShapeError("loop JSON needs \"n\" and \"table\"");
    auto rows = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rows.size()) != j.at("n").get<int>())
        throw ShapeError("loop JSON: \"n\" does not match table size");
    return FiniteLoop::from_rows(rows);
}

nlohmann::json permutation_to_json(const Permutation& p) { return nlohmann::json(p.image()); }

Permutation permutation_from_json(const nlohmann::json& j) {
    return Permutation(j.get<std::vector<int>>());
}

FiniteLoop read_loop_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return loop_from_text(ss.str());
}

void write_loop_file(const std::string& path, const FiniteLoop& L) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF line ends everywhere
    if (!out) throw Error("cannot write " + path);
    out << to_loop_text(L);
}

}  // namespace loopforge
