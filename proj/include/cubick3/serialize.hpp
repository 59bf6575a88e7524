#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubick3/conditions.hpp"
#include "cubick3/cubic_k3.hpp"
#include "cubick3/lattice.hpp"
#include "cubick3/mukai.hpp"

namespace cubick3 {

using Json = nlohmann::ordered_json;

/* Integers fitting in 64 bits become JSON numbers, larger ones decimal strings. */
Json to_json(mpz_class const & x);
Json to_json(IntVector const & v);
Json to_json(IntMatrix const & m);
/* "p/q" in lowest terms, or "n" when integral */
std::string rational_string(mpq_class const & x);
Json to_json(CohClass const & a);

mpz_class integer_from_json(Json const & j);

/* Exchange format {"label": text?, "gram": [[...]]}. */
Json lattice_to_json(GramLattice const & lattice);
GramLattice lattice_from_json(Json const & j);

Json to_json(Signature const & s);
Json to_json(DiscGroup const & g);
Json to_json(NLVectorReport const & r);
Json to_json(ConditionFlags const & f);
Json to_json(PellSolution const & p);
Json to_json(MukaiSet const & s);

/* Everything known about one discriminant. */
struct Report {
    long d = 0;
    ConditionFlags flags;
    std::optional<NLVectorReport> nl;
    int boundary = 0;
    std::optional<PellSolution> pell;
    std::vector<std::string> notes;
};

Report classify(long d);
Json to_json(Report const & r);
std::string report_text(Report const & r);

std::string table_csv(std::vector<ConditionFlags> const & rows);
Json table_json(std::vector<ConditionFlags> const & rows);
/* Rows (***), (**), (**'), (*) over the listed d, split into blocks of 12 columns. */
std::string table_markdown(std::vector<ConditionFlags> const & rows);

} // namespace cubick3
