#include "ontokit/parser.hpp"

#include <cctype>
#include <set>
#include <utility>

#include "ontokit/errors.hpp"

namespace ontokit {

namespace {

enum class Tok { End, LParen, RParen, Equals, DoubleCaret, Name, Pname, FullIri, String, LangTag };

struct Token {
    Tok kind = Tok::End;
    std::string text;   // Name: keyword; FullIri: the IRI; String: unescaped value; LangTag: tag
    std::string prefix; // Pname only
    std::string local;  // Pname only
    int line = 1;
    int column = 1;
};

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == '%';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = text_[pos_];
        switch (c) {
        case '(': advance(); t.kind = Tok::LParen; return t;
        case ')': advance(); t.kind = Tok::RParen; return t;
        case '=': advance(); t.kind = Tok::Equals; return t;
        case '^':
            advance();
            if (pos_ >= text_.size() || text_[pos_] != '^')
                throw ParseError("stray '^'", t.line, t.column);
            advance();
            t.kind = Tok::DoubleCaret;
            return t;
        case '<': return full_iri(t);
        case '"': return string_literal(t);
        case '@': return lang_tag(t);
        default: break;
        }
        if (name_char(c) || c == ':')
            return name_or_pname(t);
        throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    Token full_iri(Token t) {
        advance(); // '<'
        std::string iri;
        while (pos_ < text_.size() && text_[pos_] != '>') {
            if (text_[pos_] == '\n')
                throw ParseError("newline inside IRI", t.line, t.column);
            iri += text_[pos_];
            advance();
        }
        if (pos_ >= text_.size())
            throw ParseError("unterminated IRI", t.line, t.column);
        advance(); // '>'
        t.kind = Tok::FullIri;
        t.text = std::move(iri);
        return t;
    }

    Token string_literal(Token t) {
        advance(); // '"'
        std::string value;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            char c = text_[pos_];
            if (c == '\\') {
                advance();
                if (pos_ >= text_.size())
                    break;
                char esc = text_[pos_];
                if (esc != '"' && esc != '\\')
                    throw ParseError(std::string("invalid escape '\\") + esc + "' in literal",
                                     line_, column_);
                value += esc;
                advance();
            } else {
                value += c;
                advance();
            }
        }
        if (pos_ >= text_.size())
            throw ParseError("unterminated string literal", t.line, t.column);
        advance(); // '"'
        t.kind = Tok::String;
        t.text = std::move(value);
        return t;
    }

    Token lang_tag(Token t) {
        advance(); // '@'
        std::string tag;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
            tag += text_[pos_];
            advance();
        }
        if (tag.empty())
            throw ParseError("empty language tag", t.line, t.column);
        t.kind = Tok::LangTag;
        t.text = std::move(tag);
        return t;
    }

    Token name_or_pname(Token t) {
        std::string head;
        while (pos_ < text_.size() && name_char(text_[pos_]))
            head += text_[pos_], advance();
        if (pos_ < text_.size() && text_[pos_] == ':') {
            advance();
            std::string local;
            while (pos_ < text_.size() && name_char(text_[pos_]))
                local += text_[pos_], advance();
            t.kind = Tok::Pname;
            t.prefix = std::move(head);
            t.local = std::move(local);
            return t;
        }
        if (head.empty())
            throw ParseError("unexpected ':'", t.line, t.column);
        t.kind = Tok::Name;
        t.text = std::move(head);
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

// Raised internally when a recognised-but-unsupported construct shows
// up inside an axiom; the axiom parser converts it into a warning.
struct Unsupported {
    std::string what;
    int line;
    int column;
};

const std::set<std::string>& unsupported_axiom_keywords() {
    static const std::set<std::string> kws = {
        "Import", "DisjointClasses", "DisjointUnion", "EquivalentObjectProperties",
        "DisjointObjectProperties", "InverseObjectProperties", "ObjectPropertyDomain",
        "ObjectPropertyRange", "FunctionalObjectProperty", "InverseFunctionalObjectProperty",
        "ReflexiveObjectProperty", "IrreflexiveObjectProperty", "SymmetricObjectProperty",
        "AsymmetricObjectProperty", "TransitiveObjectProperty", "SubDataPropertyOf",
        "EquivalentDataProperties", "DisjointDataProperties", "DataPropertyDomain",
        "DataPropertyRange", "FunctionalDataProperty", "DatatypeDefinition", "HasKey",
        "SameIndividual", "DifferentIndividuals", "DataPropertyAssertion",
        "NegativeObjectPropertyAssertion", "NegativeDataPropertyAssertion",
        "SubAnnotationPropertyOf", "AnnotationPropertyDomain", "AnnotationPropertyRange",
    };
    return kws;
}

const std::set<std::string>& unsupported_expression_keywords() {
    static const std::set<std::string> kws = {
        "ObjectOneOf", "ObjectHasValue", "ObjectHasSelf", "ObjectMinCardinality",
        "ObjectMaxCardinality", "ObjectExactCardinality", "ObjectInverseOf",
        "DataSomeValuesFrom", "DataAllValuesFrom", "DataHasValue", "DataMinCardinality",
        "DataMaxCardinality", "DataExactCardinality",
    };
    return kws;
}

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {
        // PNames resolve against the ontology's live prefix table, so
        // Prefix declarations take effect as soon as they are read.
        prefixes_ = &result_.ontology.prefixes();
        shift();
    }

    ParseResult parse_document() {
        while (cur_.kind == Tok::Name && cur_.text == "Prefix")
            parse_prefix(result_.ontology);
        expect_keyword("Ontology");
        expect(Tok::LParen);
        if (cur_.kind == Tok::FullIri) {
            result_.ontology.set_ontology_iri(make_iri(cur_.text, cur_.line, cur_.column));
            shift();
            if (cur_.kind == Tok::FullIri) { // version IRI: valid, not represented
                warn(result_, "version IRI ignored", cur_.line, cur_.column);
                shift();
            }
        }
        while (cur_.kind != Tok::RParen) {
            if (cur_.kind == Tok::End)
                throw ParseError("unexpected end of input inside Ontology(...)", cur_.line,
                                 cur_.column);
            parse_axiom(result_);
        }
        shift(); // ')'
        if (cur_.kind != Tok::End)
            throw ParseError("trailing content after the closing ')' of Ontology", cur_.line,
                             cur_.column);
        return std::move(result_);
    }

    ConceptPtr parse_single_expression(const std::map<std::string, std::string>& prefixes) {
        prefixes_ = &prefixes;
        ConceptPtr expr;
        try {
            expr = parse_class_expr();
        } catch (const Unsupported& u) {
            throw ParseError("unsupported construct " + u.what, u.line, u.column);
        }
        if (cur_.kind != Tok::End)
            throw ParseError("trailing content after the class expression", cur_.line,
                             cur_.column);
        return expr;
    }

private:
    void shift() {
        if (cur_.kind == Tok::LParen)
            ++depth_;
        else if (cur_.kind == Tok::RParen)
            --depth_;
        cur_ = lexer_.next();
    }

    void expect(Tok kind) {
        if (cur_.kind != kind)
            throw ParseError("unexpected token", cur_.line, cur_.column);
        shift();
    }

    void expect_keyword(const char* kw) {
        if (cur_.kind != Tok::Name || cur_.text != kw)
            throw ParseError(std::string("expected '") + kw + "'", cur_.line, cur_.column);
        shift();
    }

    void warn(ParseResult& result, std::string message, int line, int column) {
        result.warnings.push_back({std::move(message), line, column});
    }

    // Consume tokens until the depth drops back to `base` (i.e. past the
    // closing paren of whatever construct we are abandoning).
    void skip_to_depth(int base) {
        while (depth_ > base) {
            if (cur_.kind == Tok::End)
                throw ParseError("unexpected end of input while skipping a construct", cur_.line,
                                 cur_.column);
            shift();
        }
    }

    // An IRI that fails lexical validation is a syntax problem of the
    // document, so it surfaces as a positioned ParseError.
    static Iri make_iri(const std::string& text, int line, int column) {
        try {
            return Iri(text);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line, column);
        }
    }

    Iri expand(const Token& t) const {
        if (t.kind == Tok::FullIri)
            return make_iri(t.text, t.line, t.column);
        auto it = prefixes_->find(t.prefix);
        if (it == prefixes_->end())
            throw ParseError("undeclared prefix '" + t.prefix + ":'", t.line, t.column);
        return make_iri(it->second + t.local, t.line, t.column);
    }

    Iri parse_iri() {
        if (cur_.kind != Tok::FullIri && cur_.kind != Tok::Pname)
            throw ParseError("expected an IRI", cur_.line, cur_.column);
        Iri iri = expand(cur_);
        shift();
        return iri;
    }

    void parse_prefix(Ontology& onto) {
        shift(); // Prefix
        expect(Tok::LParen);
        if (cur_.kind != Tok::Pname || !cur_.local.empty())
            throw ParseError("expected a prefix name before '='", cur_.line, cur_.column);
        std::string name = cur_.prefix;
        shift();
        expect(Tok::Equals);
        if (cur_.kind != Tok::FullIri)
            throw ParseError("expected a full IRI in Prefix declaration", cur_.line, cur_.column);
        onto.set_prefix(name, cur_.text);
        shift();
        expect(Tok::RParen);
    }

    ConceptPtr parse_class_expr() {
        if (cur_.kind == Tok::FullIri || cur_.kind == Tok::Pname) {
            return ConceptExpr::named(parse_iri());
        }
        if (cur_.kind != Tok::Name)
            throw ParseError("expected a class expression", cur_.line, cur_.column);
        std::string kw = cur_.text;
        int line = cur_.line, column = cur_.column;
        if (unsupported_expression_keywords().count(kw)) {
            shift();
            throw Unsupported{kw, line, column};
        }
        if (kw == "ObjectIntersectionOf" || kw == "ObjectUnionOf") {
            shift();
            expect(Tok::LParen);
            std::vector<ConceptPtr> ops;
            while (cur_.kind != Tok::RParen)
                ops.push_back(parse_class_expr());
            shift(); // ')'
            if (ops.size() < 2)
                throw ParseError(kw + " needs at least two operands", line, column);
            return kw == "ObjectIntersectionOf" ? ConceptExpr::intersection(std::move(ops))
                                                : ConceptExpr::union_of(std::move(ops));
        }
        if (kw == "ObjectComplementOf") {
            shift();
            expect(Tok::LParen);
            auto op = parse_class_expr();
            expect(Tok::RParen);
            return ConceptExpr::complement(std::move(op));
        }
        if (kw == "ObjectSomeValuesFrom" || kw == "ObjectAllValuesFrom") {
            shift();
            expect(Tok::LParen);
            Iri role = parse_role(line, column);
            auto filler = parse_class_expr();
            expect(Tok::RParen);
            return kw == "ObjectSomeValuesFrom" ? ConceptExpr::some(std::move(role), std::move(filler))
                                                : ConceptExpr::only(std::move(role), std::move(filler));
        }
        throw ParseError("unknown class-expression construct '" + kw + "'", line, column);
    }

    Iri parse_role(int line, int column) {
        if (cur_.kind == Tok::Name && cur_.text == "ObjectInverseOf") {
            shift();
            throw Unsupported{"ObjectInverseOf", line, column};
        }
        return parse_iri();
    }

    void parse_axiom(ParseResult& result) {
        if (cur_.kind != Tok::Name)
            throw ParseError("expected an axiom", cur_.line, cur_.column);
        std::string kw = cur_.text;
        int line = cur_.line, column = cur_.column;
        if (unsupported_axiom_keywords().count(kw)) {
            shift();
            int base = depth_;
            expect(Tok::LParen);
            skip_to_depth(base);
            warn(result, "skipped unsupported axiom " + kw, line, column);
            return;
        }
        shift();
        int base = depth_;
        expect(Tok::LParen);
        // Axiom annotations are valid OWL but outside our subset.
        if (cur_.kind == Tok::Name && cur_.text == "Annotation") {
            skip_to_depth(base);
            warn(result, "skipped " + kw + " carrying axiom annotations", line, column);
            return;
        }
        try {
            parse_axiom_body(kw, line, column, result);
        } catch (const Unsupported& u) {
            skip_to_depth(base);
            warn(result,
                 "skipped " + kw + " using unsupported construct " + u.what, u.line, u.column);
        }
    }

    void parse_axiom_body(const std::string& kw, int line, int column, ParseResult& result) {
        Ontology& onto = result.ontology;
        if (kw == "Declaration") {
            if (cur_.kind != Tok::Name)
                throw ParseError("expected an entity kind inside Declaration", cur_.line,
                                 cur_.column);
            std::string entity = cur_.text;
            int eline = cur_.line, ecolumn = cur_.column;
            shift();
            expect(Tok::LParen);
            Iri iri = parse_iri();
            expect(Tok::RParen);
            expect(Tok::RParen);
            if (entity == "Class")
                onto.add_axiom(Axiom::declaration(EntityKind::Class, iri));
            else if (entity == "ObjectProperty")
                onto.add_axiom(Axiom::declaration(EntityKind::ObjectProperty, iri));
            else if (entity == "NamedIndividual")
                onto.add_axiom(Axiom::declaration(EntityKind::NamedIndividual, iri));
            else if (entity == "AnnotationProperty")
                onto.add_axiom(Axiom::declaration(EntityKind::AnnotationProperty, iri));
            else if (entity == "DataProperty" || entity == "Datatype")
                warn(result, "skipped Declaration of unsupported entity kind " + entity, eline,
                     ecolumn);
            else
                throw ParseError("unknown entity kind '" + entity + "' in Declaration", eline,
                                 ecolumn);
            return;
        }
        if (kw == "SubClassOf") {
            auto sub = parse_class_expr();
            auto sup = parse_class_expr();
            expect(Tok::RParen);
            onto.add_axiom(Axiom::subclass_of(std::move(sub), std::move(sup)));
            return;
        }
        if (kw == "EquivalentClasses") {
            std::vector<ConceptPtr> members;
            while (cur_.kind != Tok::RParen)
                members.push_back(parse_class_expr());
            shift(); // ')'
            if (members.size() < 2)
                throw ParseError("EquivalentClasses needs at least two expressions", line, column);
            onto.add_axiom(Axiom::equivalent_classes(std::move(members)));
            return;
        }
        if (kw == "SubObjectPropertyOf") {
            if (cur_.kind == Tok::Name && cur_.text == "ObjectPropertyChain") {
                int cline = cur_.line, ccolumn = cur_.column;
                shift();
                expect(Tok::LParen);
                std::vector<Iri> chain;
                while (cur_.kind != Tok::RParen)
                    chain.push_back(parse_role(cur_.line, cur_.column));
                shift(); // ')'
                Iri sup = parse_role(cur_.line, cur_.column);
                expect(Tok::RParen);
                if (chain.size() != 2)
                    throw Unsupported{"ObjectPropertyChain of length " +
                                          std::to_string(chain.size()),
                                      cline, ccolumn};
                onto.add_axiom(Axiom::sub_property_chain_of(chain[0], chain[1], sup));
            } else {
                Iri sub = parse_role(cur_.line, cur_.column);
                Iri sup = parse_role(cur_.line, cur_.column);
                expect(Tok::RParen);
                onto.add_axiom(Axiom::sub_property_of(std::move(sub), std::move(sup)));
            }
            return;
        }
        if (kw == "ClassAssertion") {
            auto type = parse_class_expr();
            Iri individual = parse_iri();
            expect(Tok::RParen);
            onto.add_axiom(Axiom::class_assertion(std::move(type), std::move(individual)));
            return;
        }
        if (kw == "ObjectPropertyAssertion") {
            Iri role = parse_role(cur_.line, cur_.column);
            Iri subject = parse_iri();
            Iri object = parse_iri();
            expect(Tok::RParen);
            onto.add_axiom(
                Axiom::property_assertion(std::move(role), std::move(subject), std::move(object)));
            return;
        }
        if (kw == "AnnotationAssertion") {
            Iri property = parse_iri();
            if (cur_.kind != Tok::FullIri && cur_.kind != Tok::Pname)
                throw Unsupported{"anonymous annotation subject", cur_.line, cur_.column};
            Iri subject = parse_iri();
            if (cur_.kind == Tok::FullIri || cur_.kind == Tok::Pname)
                throw Unsupported{"IRI annotation value", cur_.line, cur_.column};
            if (cur_.kind != Tok::String)
                throw ParseError("expected a literal annotation value", cur_.line, cur_.column);
            Literal value{cur_.text, ""};
            shift();
            if (cur_.kind == Tok::LangTag) {
                value.lang = cur_.text;
                shift();
            } else if (cur_.kind == Tok::DoubleCaret) {
                int dline = cur_.line, dcolumn = cur_.column;
                shift();
                Iri datatype = parse_iri();
                if (datatype.str() != "http://www.w3.org/2001/XMLSchema#string")
                    throw Unsupported{"typed literal ^^<" + datatype.str() + ">", dline, dcolumn};
            }
            expect(Tok::RParen);
            onto.add_axiom(
                Axiom::annotation(std::move(property), std::move(subject), std::move(value)));
            return;
        }
        throw ParseError("unknown axiom '" + kw + "'", line, column);
    }

    Lexer lexer_;
    Token cur_;
    int depth_ = 0;
    ParseResult result_;
    const std::map<std::string, std::string>* prefixes_ = nullptr;
};

} // namespace

ParseResult parse_functional(std::string_view text) {
    Parser parser(text);
    return parser.parse_document();
}

ConceptPtr parse_concept_expression(std::string_view text,
                                    const std::map<std::string, std::string>& prefixes) {
    Parser parser(text);
    return parser.parse_single_expression(prefixes);
}

} // namespace ontokit
