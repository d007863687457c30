#include "coxpoly/ladder.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "coxpoly/poset.hpp"

namespace coxpoly {

namespace {
const std::vector<int> kNoSummands;
}

int ladder_hom_dim(const LadderSpec& spec, int a, int b)
{
    if (a < 1 || a > spec.n || b < 1 || b > spec.n)
        throw IndexOutOfRange("ladder_hom_dim: index out of range");
    if (spec.flavor == LadderFlavor::projective)
        return (a <= b && b < a + spec.r) ? 1 : 0;
    return (b <= a && a < b + spec.r) ? 1 : 0;
}

WordCheck validate_word(const LadderSpec& spec, const std::vector<int>& word)
{
    if (word.empty())
        return {false, "empty word"};
    for (int a : word)
        if (a < 1 || a > spec.n)
            return {false, "index " + std::to_string(a) + " out of range"};
    for (size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] == word[i + 1])
            return {false, "identity map between equal summands " + std::to_string(word[i])};
        if (ladder_hom_dim(spec, word[i], word[i + 1]) == 0)
            return {false, "zero map between consecutive summands " + std::to_string(word[i]) +
                               " -> " + std::to_string(word[i + 1])};
    }
    for (size_t i = 0; i + 2 < word.size(); ++i)
        if (ladder_hom_dim(spec, word[i], word[i + 2]) != 0)
            return {false, "nonvanishing composite " + std::to_string(word[i]) + " -> " +
                               std::to_string(word[i + 2])};
    return {true, ""};
}

LadderComplex::LadderComplex(LadderSpec spec, int min_deg,
                             std::vector<std::vector<int>> summands, std::vector<RatMatrix> diffs)
    : spec_(spec), min_deg_(min_deg), summands_(std::move(summands)), diffs_(std::move(diffs))
{
}

const std::vector<int>& LadderComplex::summands_at(int deg) const
{
    const int d = deg - min_deg_;
    if (d < 0 || d >= static_cast<int>(summands_.size()))
        return kNoSummands;
    return summands_[d];
}

Rat LadderComplex::diff_entry(int deg, int row, int col) const
{
    const int d = deg - min_deg_;
    if (d < 0 || d >= static_cast<int>(diffs_.size()))
        return Rat(0);
    return diffs_[d].at(row, col);
}

LadderComplex LadderComplex::word(const LadderSpec& spec, int min_deg, std::vector<int> indices)
{
    WordCheck chk = validate_word(spec, indices);
    if (!chk.ok)
        throw ComplexFormatError("invalid word: " + chk.reason);
    std::vector<std::vector<int>> summands;
    summands.reserve(indices.size());
    for (int a : indices)
        summands.push_back({a});
    std::vector<RatMatrix> diffs;
    for (size_t i = 0; i + 1 < indices.size(); ++i) {
        RatMatrix d(1, 1);
        d.at(0, 0) = 1;
        diffs.push_back(std::move(d));
    }
    return LadderComplex(spec, min_deg, std::move(summands), std::move(diffs));
}

LadderComplex LadderComplex::from_parts(const LadderSpec& spec, int min_deg,
                                        std::vector<std::vector<int>> summands,
                                        std::vector<RatMatrix> diffs)
{
    // Trim empty degrees at both ends.
    while (!summands.empty() && summands.front().empty()) {
        summands.erase(summands.begin());
        if (!diffs.empty())
            diffs.erase(diffs.begin());
        ++min_deg;
    }
    while (!summands.empty() && summands.back().empty()) {
        summands.pop_back();
        if (!diffs.empty())
            diffs.pop_back();
    }
    if (summands.empty())
        throw ComplexFormatError("complex has no summands");
    if (diffs.size() + 1 != summands.size())
        throw ComplexFormatError("differential count does not match degree count");

    for (const auto& layer : summands)
        for (int a : layer)
            if (a < 1 || a > spec.n)
                throw ComplexFormatError("summand index out of range");

    for (size_t d = 0; d < diffs.size(); ++d) {
        const auto& src = summands[d];
        const auto& dst = summands[d + 1];
        const RatMatrix& m = diffs[d];
        if (m.rows() != static_cast<int>(dst.size()) || m.cols() != static_cast<int>(src.size()))
            throw ComplexFormatError("differential at degree " +
                                     std::to_string(min_deg + static_cast<int>(d)) +
                                     " has wrong shape");
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (m.at(i, j) != 0 && ladder_hom_dim(spec, src[j], dst[i]) == 0)
                    throw ComplexFormatError("differential coefficient on a vanishing Hom space");
    }
    // d o d = 0 through basis-map composition, which dies exactly when the
    // end-to-end Hom space dies.
    for (size_t d = 0; d + 1 < diffs.size(); ++d) {
        const auto& a = summands[d];
        const auto& b = summands[d + 1];
        const auto& c = summands[d + 2];
        for (size_t t = 0; t < a.size(); ++t)
            for (size_t w = 0; w < c.size(); ++w) {
                if (ladder_hom_dim(spec, a[t], c[w]) == 0)
                    continue;
                Rat sum(0);
                for (size_t s = 0; s < b.size(); ++s)
                    sum += diffs[d + 1].at(static_cast<int>(w), static_cast<int>(s)) *
                           diffs[d].at(static_cast<int>(s), static_cast<int>(t));
                if (sum != 0)
                    throw ComplexFormatError("differentials do not compose to zero");
            }
    }
    return LadderComplex(spec, min_deg, std::move(summands), std::move(diffs));
}

std::string LadderComplex::to_string() const
{
    std::ostringstream os;
    for (int d = min_deg(); d <= max_deg(); ++d) {
        os << "@" << d << ":";
        for (size_t i = 0; i < summands_at(d).size(); ++i)
            os << (i ? "," : " ") << summands_at(d)[i];
        if (d < max_deg())
            os << "  ";
    }
    return os.str();
}

int complex_hom_k_dim(const LadderComplex& X, const LadderComplex& Y, int k)
{
    if (!(X.spec() == Y.spec()))
        throw SpecMismatch("complex_hom_k_dim: complexes live over different ladders");
    const LadderSpec& spec = X.spec();

    // Variables of a degree-k map live on pairs (t in X^i, s in Y^{i+k})
    // with nonvanishing ladder Hom.
    struct Key {
        int deg, xi, yi;
        bool operator<(const Key& o) const
        {
            return std::tie(deg, xi, yi) < std::tie(o.deg, o.xi, o.yi);
        }
    };
    auto collect_vars = [&](int shift) {
        std::map<Key, int> vars;
        for (int i = X.min_deg(); i <= X.max_deg(); ++i) {
            const auto& xs = X.summands_at(i);
            const auto& ys = Y.summands_at(i + shift);
            for (int xi = 0; xi < static_cast<int>(xs.size()); ++xi)
                for (int yi = 0; yi < static_cast<int>(ys.size()); ++yi)
                    if (ladder_hom_dim(spec, xs[xi], ys[yi]) != 0) {
                        const int id = static_cast<int>(vars.size());
                        vars[{i, xi, yi}] = id;
                    }
        }
        return vars;
    };

    const auto fvars = collect_vars(k);
    if (fvars.empty())
        return 0;
    const auto hvars = collect_vars(k - 1);
    const int nf = static_cast<int>(fvars.size());

    // Chain-map constraints: for every (t in X^i, w in Y^{i+k+1}) with
    // nonvanishing Hom, the coefficient of the basis map t -> w in
    // d_Y f_i - f_{i+1} d_X must vanish. (Dimension counts are unchanged by
    // the sign convention of the shifted differential.)
    struct Row {
        std::vector<std::pair<int, Rat>> entries;
    };
    std::vector<Row> rows;
    for (int i = X.min_deg(); i <= X.max_deg() + 1; ++i) {
        const auto& xs = X.summands_at(i);
        const auto& ws = Y.summands_at(i + k + 1);
        if (xs.empty() || ws.empty())
            continue;
        for (int xi = 0; xi < static_cast<int>(xs.size()); ++xi)
            for (int wi = 0; wi < static_cast<int>(ws.size()); ++wi) {
                if (ladder_hom_dim(spec, xs[xi], ws[wi]) == 0)
                    continue;
                Row row;
                const auto& ys = Y.summands_at(i + k);
                for (int yi = 0; yi < static_cast<int>(ys.size()); ++yi) {
                    if (ladder_hom_dim(spec, xs[xi], ys[yi]) == 0 ||
                        ladder_hom_dim(spec, ys[yi], ws[wi]) == 0)
                        continue;
                    const Rat c = Y.diff_entry(i + k, wi, yi);
                    if (c != 0)
                        row.entries.emplace_back(fvars.at({i, xi, yi}), c);
                }
                const auto& x2 = X.summands_at(i + 1);
                for (int ti = 0; ti < static_cast<int>(x2.size()); ++ti) {
                    if (ladder_hom_dim(spec, xs[xi], x2[ti]) == 0 ||
                        ladder_hom_dim(spec, x2[ti], ws[wi]) == 0)
                        continue;
                    const Rat c = X.diff_entry(i, ti, xi);
                    if (c != 0) {
                        auto it = fvars.find({i + 1, ti, wi});
                        if (it != fvars.end())
                            row.entries.emplace_back(it->second, -c);
                    }
                }
                if (!row.entries.empty())
                    rows.push_back(std::move(row));
            }
    }

    int rank_constraints = 0;
    if (!rows.empty()) {
        RatMatrix C(static_cast<int>(rows.size()), nf);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            for (const auto& [j, c] : rows[i].entries)
                C.at(i, j) += c;
        rank_constraints = rat_solve_dim(std::move(C)).rank;
    }

    // Image of the homotopy map h |-> d_Y h + h d_X inside the chain-map
    // coordinate space.
    int rank_homotopy = 0;
    if (!hvars.empty()) {
        RatMatrix T(nf, static_cast<int>(hvars.size()));
        for (const auto& [key, fid] : fvars) {
            const int i = key.deg;
            const int t = X.summands_at(i)[key.xi];
            const int s = Y.summands_at(i + k)[key.yi];
            const auto& yprev = Y.summands_at(i + k - 1);
            for (int pi = 0; pi < static_cast<int>(yprev.size()); ++pi) {
                if (ladder_hom_dim(spec, t, yprev[pi]) == 0 ||
                    ladder_hom_dim(spec, yprev[pi], s) == 0)
                    continue;
                const Rat c = Y.diff_entry(i + k - 1, key.yi, pi);
                if (c != 0)
                    T.at(fid, hvars.at({i, key.xi, pi})) += c;
            }
            const auto& xnext = X.summands_at(i + 1);
            for (int ti = 0; ti < static_cast<int>(xnext.size()); ++ti) {
                if (ladder_hom_dim(spec, t, xnext[ti]) == 0 ||
                    ladder_hom_dim(spec, xnext[ti], s) == 0)
                    continue;
                const Rat c = X.diff_entry(i, ti, key.xi);
                if (c != 0) {
                    auto it = hvars.find({i + 1, ti, key.yi});
                    if (it != hvars.end())
                        T.at(fid, it->second) += c;
                }
            }
        }
        rank_homotopy = rat_solve_dim(std::move(T)).rank;
    }

    return nf - rank_constraints - rank_homotopy;
}

LadderComplex projective_resolution(const LadderSpec& spec, int a, int j)
{
    if (spec.flavor != LadderFlavor::projective)
        throw InvalidParameter("projective_resolution: needs the projective flavor");
    if (a < 1 || a > spec.n)
        throw IndexOutOfRange("projective_resolution: top index out of range");
    if (j < 1 || j > std::min(a, spec.r))
        throw InvalidParameter("projective_resolution: need 1 <= j <= min(a, r)");

    std::vector<int> tops;
    std::set<std::pair<int, int>> seen;
    int top = a, len = j;
    while (true) {
        if (!seen.insert({top, len}).second)
            throw NonTerminating("projective_resolution: syzygy repeats");
        tops.push_back(top);
        const int full = std::min(top, spec.r);
        if (len == full)
            break;  // the module is the projective itself
        const int next_len = full - len;
        top -= len;
        len = next_len;
    }
    std::reverse(tops.begin(), tops.end());
    const int min_deg = -(static_cast<int>(tops.size()) - 1);
    return LadderComplex::word(spec, min_deg, std::move(tops));
}

LadderComplex injective_coresolution(const LadderSpec& spec, int a, int j)
{
    if (spec.flavor != LadderFlavor::injective)
        throw InvalidParameter("injective_coresolution: needs the injective flavor");
    if (a < 1 || a > spec.n)
        throw IndexOutOfRange("injective_coresolution: top index out of range");
    // Mirror i <-> n+1-i swaps socles with tops, so the coresolution is the
    // reversed projective resolution of the mirrored module; its indices are
    // already the ladder indices of the injectives.
    const LadderSpec mirrored(spec.n, spec.r, LadderFlavor::projective);
    const LadderComplex res = projective_resolution(mirrored, spec.n - a + j, j);
    std::vector<int> word;
    for (int d = res.max_deg(); d >= res.min_deg(); --d)
        word.push_back(res.summands_at(d)[0]);
    return LadderComplex::word(spec, 0, std::move(word));
}

DimVector k0_class(const LadderComplex& X)
{
    const LadderSpec& spec = X.spec();
    const IntMatrix C = nakayama_cartan(spec.n, spec.r);
    DimVector v(spec.n, Int(0));
    for (int d = X.min_deg(); d <= X.max_deg(); ++d) {
        const Int sgn = sign_pow(d);
        for (int s : X.summands_at(d)) {
            if (spec.flavor == LadderFlavor::projective) {
                for (int i = 0; i < spec.n; ++i)
                    v[i] += sgn * C.at(i, s - 1);  // column s
            } else {
                const int b = spec.n + 1 - s;
                for (int i = 0; i < spec.n; ++i)
                    v[i] += sgn * C.at(b - 1, i);  // row n+1-s
            }
        }
    }
    return v;
}

TiltingWhich tilting_which_from_string(const std::string& s)
{
    if (s == "upper")
        return TiltingWhich::upper;
    if (s == "lower")
        return TiltingWhich::lower;
    if (s == "post")
        return TiltingWhich::post;
    if (s == "pre")
        return TiltingWhich::pre;
    throw InvalidParameter("unknown tilting family '" + s + "'");
}

std::string to_string(TiltingWhich w)
{
    switch (w) {
        case TiltingWhich::upper: return "upper";
        case TiltingWhich::lower: return "lower";
        case TiltingWhich::post: return "post";
        case TiltingWhich::pre: return "pre";
    }
    return "?";
}

std::vector<LadderComplex> tilting_family(int u, int v, TiltingWhich which)
{
    if (u < 1 || v < 1)
        throw InvalidParameter("tilting_family: need u, v >= 1");
    const int n = 2 * u + v;
    const int r = u + v + 1;
    std::vector<LadderComplex> fam;
    fam.reserve(n);
    switch (which) {
        case TiltingWhich::upper: {
            const LadderSpec spec(n, r, LadderFlavor::projective);
            for (int i = u + v; i <= 2 * u + v; ++i)
                fam.push_back(LadderComplex::word(spec, 0, {i}));
            for (int j = 1; j <= u + v - 1; ++j)
                fam.push_back(projective_resolution(spec, u + v, j));
            break;
        }
        case TiltingWhich::lower: {
            const LadderSpec spec(n, r, LadderFlavor::injective);
            for (int i = 1; i <= u + 1; ++i)
                fam.push_back(LadderComplex::word(spec, 0, {n + 1 - i}));
            for (int j = 1; j <= u + v - 1; ++j)
                fam.push_back(injective_coresolution(spec, u + j, j));
            break;
        }
        case TiltingWhich::post: {
            const LadderSpec spec(n, r, LadderFlavor::projective);
            fam.push_back(LadderComplex::word(spec, 0, {r}));
            for (int i = 1; i <= u - 1; ++i)
                fam.push_back(LadderComplex::word(spec, 0, {r, r + i}));
            for (int j = u; j <= u + v; ++j)
                fam.push_back(LadderComplex::word(spec, -1, {j, r}));
            for (int l = 1; l <= u - 1; ++l)
                fam.push_back(LadderComplex::word(spec, -1, {l, r, r + l}));
            break;
        }
        case TiltingWhich::pre: {
            const LadderSpec spec(n, r, LadderFlavor::injective);
            fam.push_back(LadderComplex::word(spec, 0, {r}));
            for (int i = 1; i <= u - 1; ++i)
                fam.push_back(LadderComplex::word(spec, -1, {n + 1 - i, r}));
            for (int j = u + 1; j <= u + v + 1; ++j)
                fam.push_back(LadderComplex::word(spec, 0, {r, n + 1 - j}));
            for (int l = 1; l <= u - 1; ++l)
                fam.push_back(LadderComplex::word(spec, -1, {n + 1 - l, r, u - l}));
            break;
        }
    }
    return fam;
}

TiltingReport verify_tilting(const std::vector<LadderComplex>& family, RunMode mode)
{
    if (family.empty())
        throw InvalidParameter("verify_tilting: empty family");
    const LadderSpec& spec = family.front().spec();
    for (const auto& c : family)
        if (!(c.spec() == spec))
            throw SpecMismatch("verify_tilting: summands over different ladders");

    const int m = static_cast<int>(family.size());
    int lo = family.front().min_deg(), hi = family.front().max_deg();
    for (const auto& c : family) {
        lo = std::min(lo, c.min_deg());
        hi = std::max(hi, c.max_deg());
    }
    const int shift_bound = (hi - lo) + 1;
    const int nshifts = 2 * shift_bound + 1;

    const long total = static_cast<long>(m) * m * nshifts;
    std::vector<int> dims(total);
    run_indexed(total, mode, [&](long idx) {
        const int k = static_cast<int>(idx % nshifts) - shift_bound;
        const long st = idx / nshifts;
        const int t = static_cast<int>(st % m);
        const int s = static_cast<int>(st / m);
        dims[idx] = complex_hom_k_dim(family[s], family[t], k);
    });

    TiltingReport rep{true, {}, {}, false, Int(0), IntMatrix(m), shift_bound};
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t)
            for (int k = -shift_bound; k <= shift_bound; ++k) {
                const long idx = (static_cast<long>(s) * m + t) * nshifts + (k + shift_bound);
                const int d = dims[idx];
                if (k == 0)
                    rep.end_cartan.at(s, t) = d;
                else if (d != 0) {
                    rep.rigid = false;
                    rep.violations.push_back({s, t, k, d});
                }
            }

    rep.k0_classes.reserve(m);
    for (const auto& c : family)
        rep.k0_classes.push_back(k0_class(c));
    if (m == spec.n) {
        IntMatrix K(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                K.at(i, j) = rep.k0_classes[i][j];
        rep.k0_det = det(K);
        rep.k0_unimodular = rep.k0_det == 1 || rep.k0_det == -1;
    }
    return rep;
}

namespace {

Rat parse_rat_token(const std::string& tok)
{
    try {
        Rat q(tok);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ComplexFormatError("bad rational '" + tok + "'");
    }
}

}  // namespace

LadderComplex parse_complex(const LadderSpec& spec, std::istream& in)
{
    std::map<int, std::vector<int>> summands;
    std::map<int, std::vector<std::vector<Rat>>> diffs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string trimmed;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c)) || !trimmed.empty())
                trimmed += c;
        while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        if (trimmed.empty())
            continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        const auto colon = trimmed.find(':');
        if (colon == std::string::npos)
            throw ComplexFormatError("expected ':'" + where);
        const std::string head = trimmed.substr(0, colon);
        const std::string body = trimmed.substr(colon + 1);
        if (head.size() > 1 && head[0] == '@') {
            int deg;
            try {
                deg = std::stoi(head.substr(1));
            } catch (...) {
                throw ComplexFormatError("bad degree in '" + head + "'" + where);
            }
            if (summands.count(deg))
                throw ComplexFormatError("duplicate degree " + std::to_string(deg) + where);
            std::vector<int> idx;
            std::istringstream bs(body);
            for (std::string tok; std::getline(bs, tok, ',');) {
                std::istringstream ts(tok);
                int a;
                if (!(ts >> a))
                    throw ComplexFormatError("bad summand index '" + tok + "'" + where);
                idx.push_back(a);
            }
            if (idx.empty())
                throw ComplexFormatError("degree with no summands" + where);
            summands[deg] = std::move(idx);
        } else if (head.size() > 3 && head.substr(0, 2) == "d[" && head.back() == ']') {
            int deg;
            try {
                deg = std::stoi(head.substr(2, head.size() - 3));
            } catch (...) {
                throw ComplexFormatError("bad degree in '" + head + "'" + where);
            }
            if (diffs.count(deg))
                throw ComplexFormatError("duplicate differential" + where);
            std::vector<std::vector<Rat>> rows;
            std::istringstream bs(body);
            for (std::string rowtxt; std::getline(bs, rowtxt, ';');) {
                std::vector<Rat> row;
                std::istringstream rs(rowtxt);
                for (std::string tok; rs >> tok;)
                    row.push_back(parse_rat_token(tok));
                rows.push_back(std::move(row));
            }
            diffs[deg] = std::move(rows);
        } else {
            throw ComplexFormatError("unparsable declaration '" + head + "'" + where);
        }
    }
    if (summands.empty())
        throw ComplexFormatError("complex file declares no summands");

    const int lo = summands.begin()->first;
    const int hi = summands.rbegin()->first;
    std::vector<std::vector<int>> layers;
    for (int d = lo; d <= hi; ++d) {
        auto it = summands.find(d);
        layers.push_back(it == summands.end() ? std::vector<int>{} : it->second);
    }
    std::vector<RatMatrix> dmats;
    for (int d = lo; d < hi; ++d) {
        const int rows = static_cast<int>(layers[d - lo + 1].size());
        const int cols = static_cast<int>(layers[d - lo].size());
        RatMatrix m(rows, cols);
        auto it = diffs.find(d);
        if (it == diffs.end()) {
            if (rows >= 1 && cols >= 1) {
                if (rows != 1 || cols != 1)
                    throw ComplexFormatError("differential out of degree " + std::to_string(d) +
                                             " is ambiguous and must be given");
                const int a = layers[d - lo][0], b = layers[d - lo + 1][0];
                m.at(0, 0) = (a != b && ladder_hom_dim(spec, a, b) != 0) ? 1 : 0;
            }
        } else {
            if (static_cast<int>(it->second.size()) != rows)
                throw ComplexFormatError("differential out of degree " + std::to_string(d) +
                                         " has wrong row count");
            for (int i = 0; i < rows; ++i) {
                if (static_cast<int>(it->second[i].size()) != cols)
                    throw ComplexFormatError("differential out of degree " + std::to_string(d) +
                                             " has wrong column count");
                for (int j = 0; j < cols; ++j)
                    m.at(i, j) = it->second[i][j];
            }
            diffs.erase(it);
        }
        dmats.push_back(std::move(m));
    }
    if (!diffs.empty())
        throw ComplexFormatError("differential given outside the support");
    return LadderComplex::from_parts(spec, lo, std::move(layers), std::move(dmats));
}

LadderComplex parse_complex_file(const LadderSpec& spec, const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ComplexFormatError("cannot open complex file '" + path + "'");
    return parse_complex(spec, f);
}

}  // namespace coxpoly
