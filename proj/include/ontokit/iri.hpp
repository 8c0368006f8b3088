#ifndef ONTOKIT_IRI_HPP
#define ONTOKIT_IRI_HPP

#include <functional>
#include <string>

#include "ontokit/errors.hpp"

namespace ontokit {

// Thin validated wrapper around an absolute IRI string.  We only enforce
// what serialisation needs: non-empty, no whitespace, no angle brackets.
class Iri {
public:
    Iri() = default;
    explicit Iri(std::string value) : value_(std::move(value)) {
        if (value_.empty())
            throw ValidationError("IRI must be non-empty");
        for (char c : value_) {
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' || c == '>')
                throw ValidationError("IRI contains a forbidden character: <" + value_ + ">");
        }
    }

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    // Fragment after '#', else after the last '/', else the whole IRI.
    std::string fragment() const {
        auto hash = value_.rfind('#');
        if (hash != std::string::npos && hash + 1 < value_.size())
            return value_.substr(hash + 1);
        auto slash = value_.rfind('/');
        if (slash != std::string::npos && slash + 1 < value_.size())
            return value_.substr(slash + 1);
        return value_;
    }

    friend bool operator==(const Iri& a, const Iri& b) noexcept { return a.value_ == b.value_; }
    friend bool operator!=(const Iri& a, const Iri& b) noexcept { return a.value_ != b.value_; }
    friend bool operator<(const Iri& a, const Iri& b) noexcept { return a.value_ < b.value_; }

private:
    std::string value_;
};

namespace vocab {

inline const Iri& thing() {
    static const Iri iri("http://www.w3.org/2002/07/owl#Thing");
    return iri;
}
inline const Iri& nothing() {
    static const Iri iri("http://www.w3.org/2002/07/owl#Nothing");
    return iri;
}
inline const Iri& rdfs_label() {
    static const Iri iri("http://www.w3.org/2000/01/rdf-schema#label");
    return iri;
}
inline const Iri& rdf_type() {
    static const Iri iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
    return iri;
}
inline const Iri& rdfs_subclassof() {
    static const Iri iri("http://www.w3.org/2000/01/rdf-schema#subClassOf");
    return iri;
}

} // namespace vocab

} // namespace ontokit

template <>
struct std::hash<ontokit::Iri> {
    std::size_t operator()(const ontokit::Iri& iri) const noexcept {
        return std::hash<std::string>{}(iri.str());
    }
};

#endif
