#include "minksum/errors.hpp"

#include <sstream>

namespace minksum {

std::string DegeneracyWitness::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::tied_support: os << "tied support"; break;
        case Kind::deficient_span: os << "deficient span"; break;
        case Kind::zero_side_sign: os << "zero side sign"; break;
    }
    os << " at faces (";
    for (size_t i = 0; i < face_ids.size(); ++i) {
        if (i) os << ", ";
        os << face_ids[i];
    }
    os << ")";
    if (!tied_vertex_ids.empty()) {
        os << ", tied vertices {";
        for (size_t i = 0; i < tied_vertex_ids.size(); ++i) {
            if (i) os << ", ";
            os << tied_vertex_ids[i];
        }
        os << "}";
    }
    if (!detail.empty()) os << ": " << detail;
    return os.str();
}

void DegeneracyReport::add(DegeneracyWitness w) {
    std::size_t& count = kind_counts_[static_cast<std::size_t>(w.kind)];
    if (count < max_witnesses_per_kind) {
        ++count;
        witnesses.push_back(std::move(w));
    } else {
        ++dropped;
    }
}

std::string DegeneracyReport::to_string() const {
    std::ostringstream os;
    for (const auto& w : witnesses) os << "  " << w.to_string() << "\n";
    if (dropped > 0) os << "  (+" << dropped << " further witnesses)\n";
    return os.str();
}

std::string ValidationFailure::join(const std::vector<std::string>& v) {
    std::ostringstream os;
    os << "lattice validation failed:";
    for (const auto& s : v) os << "\n  " << s;
    return os.str();
}

}  // namespace minksum
