#include "cfalg/specio.hpp"

#include <fstream>
#include <map>
#include <utility>

#include "json.hpp"

#include "cfalg/errors.hpp"

namespace cfalg {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open spec file '" + path + "'");
    }
    try {
        return json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
}

int int_field(const json& j, const std::string& key, int fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const json& v = j.at(key);
    if (!v.is_number_integer()) {
        throw ParseError("field '" + key + "' must be an integer");
    }
    return v.get<int>();
}

int required_int(const json& j, const std::string& key) {
    if (!j.contains(key)) {
        throw ParseError("missing required field '" + key + "'");
    }
    return int_field(j, key, 0);
}

Rational scalar_from_json(const json& j) {
    if (j.is_number_integer()) {
        return Rational(static_cast<long>(j.get<long long>()));
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    throw ParseError("scalars must be integers or \"p/q\" strings");
}

Permutation perm_from_json(const json& j) {
    if (!j.is_array()) {
        throw ParseError("a permutation must be an array of images");
    }
    std::vector<int> images;
    images.reserve(j.size());
    for (const json& v : j) {
        if (!v.is_number_integer()) {
            throw ParseError("permutation images must be integers");
        }
        images.push_back(v.get<int>());
    }
    return Permutation(images);
}

GroupPtr group_from_json(const json& j, int order_cap) {
    if (!j.is_object()) {
        throw ParseError("a group spec must be a JSON object");
    }
    if (j.contains("builtin")) {
        if (!j.at("builtin").is_string()) {
            throw ParseError("field 'builtin' must be a string");
        }
        const std::string name = j.at("builtin").get<std::string>();
        if (name == "quaternion8") {
            return quaternion_group();
        }
        const int n = required_int(j, "n");
        if (name == "cyclic") {
            return cyclic_group(n, order_cap);
        }
        if (name == "dihedral") {
            return dihedral_group(n, order_cap);
        }
        if (name == "symmetric") {
            return symmetric_group(n, order_cap);
        }
        throw ParseError("unknown builtin group '" + name + "'");
    }
    if (j.contains("product")) {
        const json& fac = j.at("product");
        if (!fac.is_array() || fac.size() != 2) {
            throw ParseError("field 'product' must be an array of two group specs");
        }
        GroupPtr left = group_from_json(fac.at(0), order_cap);
        GroupPtr right = group_from_json(fac.at(1), order_cap);
        return direct_product(left, right, order_cap);
    }
    if (j.contains("generators")) {
        const json& gens = j.at("generators");
        if (!gens.is_array() || gens.empty()) {
            throw ParseError("field 'generators' must be a non-empty array");
        }
        std::vector<Permutation> perms;
        perms.reserve(gens.size());
        for (const json& g : gens) {
            perms.push_back(perm_from_json(g));
        }
        return group_from_generators(perms, order_cap);
    }
    throw ParseError("a group spec needs 'builtin', 'generators', or 'product'");
}

// Locates a permutation among the group's elements by comparing images on
// the group's natural degree.
int element_index_of(const FiniteGroup& group, const Permutation& p) {
    for (int e = 0; e < group.order; ++e) {
        if (group.elements[static_cast<std::size_t>(e)] == p) {
            return e;
        }
    }
    throw BuildError("subgroup permutation is not an element of the group");
}

std::map<std::string, int> label_index(const std::vector<std::string>& labels) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        index[labels[i]] = static_cast<int>(i);
    }
    return index;
}

int lookup_label(const std::map<std::string, int>& index, const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) {
        throw ParseError("unknown basis label '" + label + "'");
    }
    return it->second;
}

Insertion insertion_from_json(const json& j,
                              const std::map<std::string, int>& index,
                              int dim) {
    Insertion ins;
    ins.element = AlgebraElement::zero(dim);
    if (j.is_string()) {
        ins.element[lookup_label(index, j.get<std::string>())] = Rational(1);
        return ins;
    }
    if (!j.is_object()) {
        throw ParseError("an insertion must be a label string or an object");
    }
    if (!j.contains("coeffs") || !j.at("coeffs").is_object()) {
        throw ParseError("an insertion object needs a 'coeffs' mapping");
    }
    for (const auto& [label, value] : j.at("coeffs").items()) {
        ins.element[lookup_label(index, label)] = scalar_from_json(value);
    }
    if (j.contains("reversed")) {
        if (!j.at("reversed").is_boolean()) {
            throw ParseError("field 'reversed' must be a boolean");
        }
        ins.reversed = j.at("reversed").get<bool>();
    }
    return ins;
}

}  // namespace

GroupFile load_group_file(const std::string& path, int order_cap) {
    const json j = load_json(path);
    GroupFile file;
    file.group = group_from_json(j, order_cap);
    std::vector<int> seed;
    if (j.contains("subgroup")) {
        const json& sub = j.at("subgroup");
        if (!sub.is_array()) {
            throw ParseError("field 'subgroup' must be an array of permutations");
        }
        for (const json& p : sub) {
            seed.push_back(element_index_of(*file.group, perm_from_json(p)));
        }
        file.has_subgroup = true;
    }
    if (j.contains("subgroup_indices")) {
        const json& sub = j.at("subgroup_indices");
        if (!sub.is_array()) {
            throw ParseError("field 'subgroup_indices' must be an array of integers");
        }
        for (const json& v : sub) {
            if (!v.is_number_integer()) {
                throw ParseError("subgroup indices must be integers");
            }
            const int e = v.get<int>();
            if (e < 0 || e >= file.group->order) {
                throw BuildError("subgroup index out of range");
            }
            seed.push_back(e);
        }
        file.has_subgroup = true;
    }
    if (file.has_subgroup) {
        file.subgroup = subgroup_closure(*file.group, seed);
    }
    return file;
}

SurfaceFile load_surface_file(const std::string& path, const EquippedCF& cf) {
    const json j = load_json(path);
    if (!j.is_object() || !j.contains("surface") || !j.at("surface").is_object()) {
        throw ParseError("a surface spec needs a 'surface' object");
    }
    const json& surf = j.at("surface");
    int handles = int_field(surf, "handles", 0);
    int crosscaps = int_field(surf, "crosscaps", 0);
    const int contours = int_field(surf, "contours", 0);
    if (crosscaps < 0) {
        throw BuildError("negative crosscap count");
    }
    // Dyck's theorem: in the presence of a crosscap, a handle is two more
    // crosscaps.  Fold surplus crosscaps into handles before construction.
    while (crosscaps > 2) {
        crosscaps -= 2;
        handles += 1;
    }

    SurfaceFile file;
    file.surface = make_surface(handles, crosscaps, contours);

    const auto a_index = label_index(cf.A.algebra.basis_labels());
    const auto b_index = label_index(cf.B.algebra.basis_labels());

    if (j.contains("interior")) {
        const json& interior = j.at("interior");
        if (!interior.is_array()) {
            throw ParseError("field 'interior' must be an array of insertions");
        }
        for (const json& ins : interior) {
            file.input.interior.push_back(
                insertion_from_json(ins, a_index, cf.A.algebra.dim()));
        }
    }
    if (j.contains("boundary")) {
        const json& boundary = j.at("boundary");
        if (!boundary.is_array()) {
            throw ParseError("field 'boundary' must be an array of contour lists");
        }
        if (static_cast<int>(boundary.size()) != contours) {
            throw ParseError("boundary lists (" + std::to_string(boundary.size()) +
                             ") do not match contours (" + std::to_string(contours) +
                             ")");
        }
        for (const json& contour : boundary) {
            if (!contour.is_array()) {
                throw ParseError("each contour must be an array of insertions");
            }
            std::vector<Insertion> list;
            for (const json& ins : contour) {
                list.push_back(insertion_from_json(ins, b_index, cf.B.algebra.dim()));
            }
            file.input.boundary.push_back(std::move(list));
        }
    } else {
        file.input.boundary.assign(static_cast<std::size_t>(contours), {});
    }
    return file;
}

AlgebraElement parse_element_spec(const std::string& text,
                                  const std::vector<std::string>& labels) {
    const auto index = label_index(labels);
    AlgebraElement out = AlgebraElement::zero(static_cast<int>(labels.size()));
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(';', pos);
        if (next == std::string::npos) {
            next = text.size();
        }
        std::string term = text.substr(pos, next - pos);
        const std::size_t eq = term.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'label=value' in element spec, got '" + term +
                             "'");
        }
        const std::string label = term.substr(0, eq);
        const std::string value = term.substr(eq + 1);
        out[lookup_label(index, label)] = Rational::parse(value);
        pos = next + 1;
    }
    return out;
}

}  // namespace cfalg
