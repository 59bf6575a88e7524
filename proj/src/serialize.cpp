#include "cubick3/serialize.hpp"

#include <sstream>

#include "cubick3/error.hpp"

namespace cubick3 {

Json to_json(mpz_class const & x)
{
    if (x.fits_slong_p())
        return Json(x.get_si());
    return Json(x.get_str());
}

Json to_json(IntVector const & v)
{
    Json a = Json::array();
    for (auto const & x : v)
        a.push_back(to_json(x));
    return a;
}

Json to_json(IntMatrix const & m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

std::string rational_string(mpq_class const & x)
{
    mpq_class y = x;
    y.canonicalize();
    return y.get_str();
}

Json to_json(CohClass const & a)
{
    Json arr = Json::array();
    for (std::size_t i = 0; i < 5; ++i)
        arr.push_back(rational_string(a[i]));
    return arr;
}

mpz_class integer_from_json(Json const & j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? mpz_class(j.get<unsigned long>()) : mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class x;
        std::string const s = j.get<std::string>();
        if (s.empty() || x.set_str(s, 10) != 0)
            throw LatticeError(ErrorKind::InvalidGram, "not a decimal integer: \"" + s + "\"");
        return x;
    }
    throw LatticeError(ErrorKind::InvalidGram, "expected an integer, got " + j.dump());
}

Json lattice_to_json(GramLattice const & lattice)
{
    Json j;
    if (!lattice.label().empty())
        j["label"] = lattice.label();
    j["gram"] = to_json(lattice.gram());
    return j;
}

GramLattice lattice_from_json(Json const & j)
{
    if (!j.is_object() || !j.contains("gram") || !j["gram"].is_array())
        throw LatticeError(ErrorKind::InvalidGram, "expected an object with a \"gram\" array");
    Json const & g = j["gram"];
    std::size_t const n = g.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!g[i].is_array() || g[i].size() != n)
            throw LatticeError(ErrorKind::InvalidGram, "gram must be a square array of arrays");
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = integer_from_json(g[i][k]);
    }
    std::string label;
    if (j.contains("label") && !j["label"].is_null()) {
        if (!j["label"].is_string())
            throw LatticeError(ErrorKind::InvalidGram, "label must be text");
        label = j["label"].get<std::string>();
    }
    return GramLattice(std::move(m), std::move(label));
}

Json to_json(Signature const & s)
{
    return Json{{"pos", s.pos}, {"neg", s.neg}, {"null", s.null}};
}

Json to_json(DiscGroup const & g)
{
    Json j;
    j["invariant_factors"] = to_json(IntVector(g.invariant_factors));
    j["order"] = to_json(g.order());
    j["cyclic"] = g.is_cyclic();
    Json gens = Json::array();
    for (auto const & v : g.generators) {
        Json row = Json::array();
        for (auto const & x : v)
            row.push_back(rational_string(x));
        gens.push_back(std::move(row));
    }
    j["generators"] = std::move(gens);
    Json b = Json::array();
    for (auto const & row : g.b_values) {
        Json r = Json::array();
        for (auto const & x : row)
            r.push_back(rational_string(x));
        b.push_back(std::move(r));
    }
    j["b"] = std::move(b);
    if (g.q_values) {
        Json q = Json::array();
        for (auto const & x : *g.q_values)
            q.push_back(rational_string(x));
        j["q"] = std::move(q);
    } else {
        j["q"] = nullptr;
    }
    return j;
}

Json to_json(NLVectorReport const & r)
{
    Json j;
    j["d"] = r.d;
    j["case"] = to_string(r.nl_case);
    j["v"] = to_json(r.v);
    j["gramK"] = to_json(r.gram_K);
    j["gramL"] = to_json(r.gram_L);
    j["gramGammaD"] = to_json(r.gram_Gamma_d);
    j["discK"] = to_json(IntVector(r.disc_K.invariant_factors));
    j["discGammaD"] = to_json(IntVector(r.disc_Gamma_d.invariant_factors));
    return j;
}

namespace {

Json witness_json(std::optional<Witness> const & w)
{
    if (!w)
        return nullptr;
    return Json{{"n", to_json(w->n)}, {"a", to_json(w->a)}};
}

std::string tf(bool b)
{
    return b ? "T" : "F";
}

std::string opt_int(std::optional<Witness> const & w, bool n)
{
    if (!w)
        return "";
    return (n ? w->n : w->a).get_str();
}

} // namespace

Json to_json(ConditionFlags const & f)
{
    Json j;
    j["d"] = f.d;
    j["star"] = f.star;
    j["starstar_prime"] = f.starstar_prime;
    j["starstar"] = f.starstar;
    j["starstarstar"] = f.starstarstar;
    j["case_mod6"] = to_string(f.case_mod6);
    j["ss_witness"] = witness_json(f.ss_witness);
    j["sss_witness"] = witness_json(f.sss_witness);
    j["excluded_from_smooth_image"] = f.excluded_from_smooth_image;
    return j;
}

Json to_json(PellSolution const & p)
{
    Json j;
    j["equation"] = p.equation;
    if (p.solution)
        j["solution"] = Json{{"p", to_json(p.solution->first)}, {"q", to_json(p.solution->second)}};
    else
        j["solution"] = nullptr;
    j["bound_searched"] = to_json(p.bound_searched);
    return j;
}

Json to_json(MukaiSet const & s)
{
    Json j;
    j["w0"] = to_json(s.w0);
    j["w1"] = to_json(s.w1);
    j["w2"] = to_json(s.w2);
    j["u1"] = to_json(s.u1);
    j["u2"] = to_json(s.u2);
    j["vLambda1"] = to_json(s.vl1);
    j["vLambda2"] = to_json(s.vl2);
    return j;
}

Report classify(long d)
{
    Report r;
    r.d = d;
    r.flags = condition_flags(d);
    if (r.flags.star)
        r.nl = hassett_triple(d);
    r.boundary = boundary_count(d);
    if (d % 6 == 0)
        r.pell = pell_brakkee(d);
    if (!r.flags.star)
        r.notes.push_back("d is not special: d is not 0 or 2 mod 6");
    if (r.flags.excluded_from_smooth_image)
        r.notes.push_back("d excluded from smooth-cubic image: the period map misses C_2 and C_6; "
                          "lattice data still reported");
    return r;
}

Json to_json(Report const & r)
{
    Json j;
    j["d"] = r.d;
    j["flags"] = to_json(r.flags);
    j["nl"] = r.nl ? to_json(*r.nl) : Json(nullptr);
    j["boundary_components"] = r.boundary;
    j["pell"] = r.pell ? to_json(*r.pell) : Json(nullptr);
    j["notes"] = r.notes;
    return j;
}

std::string report_text(Report const & r)
{
    std::ostringstream o;
    auto const & f = r.flags;
    auto witness = [](std::optional<Witness> const & w) {
        return w ? "  (n, a) = (" + w->n.get_str() + ", " + w->a.get_str() + ")" : std::string();
    };
    o << "d = " << r.d << "\n";
    o << "case mod 6: " << to_string(f.case_mod6) << "\n";
    o << "(*)    " << tf(f.star) << "\n";
    o << "(**')  " << tf(f.starstar_prime) << "\n";
    o << "(**)   " << tf(f.starstar) << witness(f.ss_witness) << "\n";
    o << "(***)  " << tf(f.starstarstar) << witness(f.sss_witness) << "\n";
    o << "boundary components: " << r.boundary << "\n";
    if (r.nl) {
        auto const & nl = *r.nl;
        o << "NL case: " << to_string(nl.nl_case) << "\n";
        o << "v = " << to_string(nl.v) << "  (v)^2 = " << nl.v_square << "\n";
        o << "K gram: " << to_string(nl.gram_K) << "\n";
        o << "L gram: " << to_string(nl.gram_L) << "\n";
        o << "Gamma_d gram: " << to_string(nl.gram_Gamma_d) << "\n";
        o << "disc K: " << to_string(IntVector(nl.disc_K.invariant_factors)) << "\n";
        o << "disc Gamma_d: " << to_string(IntVector(nl.disc_Gamma_d.invariant_factors)) << "\n";
    }
    if (r.pell) {
        o << "Pell " << r.pell->equation << ": ";
        if (r.pell->solution)
            o << "(p, q) = (" << r.pell->solution->first << ", " << r.pell->solution->second << ")\n";
        else
            o << "no solution\n";
    }
    for (auto const & n : r.notes)
        o << "note: " << n << "\n";
    return o.str();
}

std::string table_csv(std::vector<ConditionFlags> const & rows)
{
    std::ostringstream o;
    o << "d,star,ss_prime,ss,sss,case_mod6,ss_witness_n,ss_witness_a,sss_witness_n,sss_witness_a,"
         "boundary_components,pell_3p2\n";
    for (auto const & f : rows) {
        std::string pell;
        if (f.d % 6 == 0)
            pell = tf(pell_brakkee(f.d).solution.has_value());
        o << f.d << ',' << tf(f.star) << ',' << tf(f.starstar_prime) << ',' << tf(f.starstar) << ','
          << tf(f.starstarstar) << ',' << to_string(f.case_mod6) << ',' << opt_int(f.ss_witness, true)
          << ',' << opt_int(f.ss_witness, false) << ',' << opt_int(f.sss_witness, true) << ','
          << opt_int(f.sss_witness, false) << ',' << boundary_count(f.d) << ',' << pell << "\n";
    }
    return o.str();
}

Json table_json(std::vector<ConditionFlags> const & rows)
{
    Json a = Json::array();
    for (auto const & f : rows) {
        Json j = to_json(f);
        j["boundary_components"] = boundary_count(f.d);
        j["pell_3p2"] = f.d % 6 == 0 ? to_json(pell_brakkee(f.d)) : Json(nullptr);
        a.push_back(std::move(j));
    }
    return a;
}

std::string table_markdown(std::vector<ConditionFlags> const & rows)
{
    std::ostringstream o;
    std::size_t const block = 12;
    for (std::size_t start = 0; start < rows.size(); start += block) {
        std::size_t const end = std::min(rows.size(), start + block);
        if (start)
            o << "\n";
        o << "| |";
        for (std::size_t i = start; i < end; ++i)
            o << " |";
        o << "\n|---|";
        for (std::size_t i = start; i < end; ++i)
            o << "---|";
        o << "\n";
        auto row = [&](char const * name, bool ConditionFlags::*flag) {
            o << "| " << name << " |";
            for (std::size_t i = start; i < end; ++i)
                o << ' ' << (rows[i].*flag ? std::to_string(rows[i].d) : std::string()) << " |";
            o << "\n";
        };
        row("(\\*\\*\\*)", &ConditionFlags::starstarstar);
        row("(\\*\\*)", &ConditionFlags::starstar);
        row("(\\*\\*')", &ConditionFlags::starstar_prime);
        row("(\\*)", &ConditionFlags::star);
    }
    return o.str();
}

} // namespace cubick3
