#ifndef BQR_CATALOG_HPP
#define BQR_CATALOG_HPP

// Built-in presentations. Base types are kept as DSL text and parsed on
// demand; product types are built from their recipes.

#include "bqr/morphism.hpp"
#include "bqr/type.hpp"

#include <string>
#include <vector>

namespace bqr {

std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);

// Fresh presentation; unknown names throw MathError listing the known ones.
TypePresentation catalog_get(const std::string& name);
std::string catalog_provenance(const std::string& name);
// DSL source for base entries, empty for recipe entries.
std::string catalog_source(const std::string& name);
// Relation count the literature states for the entry.
std::size_t catalog_expected_relations(const std::string& name);

// A correspondence table between an algebra written in its authors'
// operation names and a product type. Each row sends a literature label
// (generator or auxiliary operation) to a factor tuple such as "(lt|*)",
// where '*' is the sum of all generators of that factor.
struct LiteratureTable {
    std::string product;                  // catalog name of the product type
    std::vector<std::string> factors;     // catalog names of the factors, in order
    std::vector<std::pair<std::string, std::string>> rows;
    std::string note;                     // transcription remarks, may be empty
};

std::vector<LiteratureTable> literature_tables();
TypePresentation literature_type(const LiteratureTable& t);
// Generator rows as a morphism literature -> product.
TypeMorphism table_morphism(const LiteratureTable& t);
// Coordinates of a tuple label in the product basis.
Vector tuple_vector(const LiteratureTable& t, const std::string& tuple);
// Auxiliary rows that disagree with the image of the literature's own
// auxiliary definition (empty when consistent).
std::vector<std::string> table_aux_mismatches(const LiteratureTable& t);

}  // namespace bqr

#endif
