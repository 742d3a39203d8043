#include "hakenlab/io.hpp"

#include <fstream>
#include <sstream>

namespace hakenlab {

namespace {

Mat2 parse_mat2(const json& j, const mpz_class& field_sqrt, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw ParseError(what + ": expected a 2x2 array of scalar strings");
    Scalar e[4];
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            const json& cell = j[size_t(i)][size_t(k)];
            if (!cell.is_string())
                throw ParseError(what + ": matrix entries must be scalar strings");
            Scalar s = Scalar::parse(cell.get<std::string>());
            if (s.radicand() != 0 && s.radicand() != field_sqrt)
                throw ParseError(what + ": entry uses sqrt(" + s.radicand().get_str() +
                                 ") outside the declared field");
            e[2 * i + k] = std::move(s);
        }
    return Mat2(e[0], e[1], e[2], e[3]);
}

IntMat parse_int_matrix(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected an array of integer rows");
    std::vector<std::vector<long>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError(what + ": expected integer rows");
        std::vector<long> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError(what + ": entries must be integers");
            r.push_back(v.get<long>());
        }
        rows.push_back(std::move(r));
    }
    return IntMat::from_rows(rows);
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Convert the byte offset into line/column for the error contract.
        size_t pos = e.byte > 0 ? e.byte - 1 : 0;
        int line = 1, col = 1;
        for (size_t i = 0; i < pos && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(what + ": " + e.what(), line, col);
    }
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path.string());
}

RepFile parse_rep_file(const json& j) {
    if (!j.is_object()) throw ParseError("representation file: expected a JSON object");
    mpz_class field_sqrt = 0;
    if (j.contains("field") && j["field"].is_object() && j["field"].contains("sqrt") &&
        !j["field"]["sqrt"].is_null()) {
        if (!j["field"]["sqrt"].is_number_integer())
            throw ParseError("field.sqrt must be an integer or null");
        field_sqrt = mpz_class(j["field"]["sqrt"].get<long>());
        if (field_sqrt < 2) throw ParseError("field.sqrt must be >= 2");
    }
    if (!j.contains("pairs") || !j["pairs"].is_array() || j["pairs"].empty())
        throw ParseError("representation file: missing non-empty \"pairs\" array");
    std::vector<std::pair<Mat2, Mat2>> pairs;
    int idx = 0;
    for (const auto& p : j["pairs"]) {
        std::string what = "pairs[" + std::to_string(idx) + "]";
        if (!p.is_object() || !p.contains("a") || !p.contains("b"))
            throw ParseError(what + ": expected {\"a\": ..., \"b\": ...}");
        Mat2 a = parse_mat2(p["a"], field_sqrt, what + ".a");
        Mat2 b = parse_mat2(p["b"], field_sqrt, what + ".b");
        if (!a.is_sl() || !b.is_sl())
            throw ParseError(what + ": generators must have determinant 1");
        pairs.emplace_back(std::move(a), std::move(b));
        ++idx;
    }
    if (j.contains("n") && j["n"].is_number_integer() &&
        j["n"].get<int>() != static_cast<int>(pairs.size()))
        throw ParseError("representation file: \"n\" does not match the pair count");
    return RepFile{field_sqrt, PairSystem(std::move(pairs))};
}

RepFile load_rep_file(const std::filesystem::path& path) {
    return parse_rep_file(load_json_file(path));
}

std::vector<LinkRecord> parse_link_corpus(const json& j) {
    if (!j.is_array()) throw ParseError("link corpus: expected a JSON array of records");
    std::vector<LinkRecord> out;
    for (const auto& r : j) {
        LinkRecord rec;
        if (!r.is_object() || !r.contains("name") || !r["name"].is_string())
            throw ParseError("link corpus: every record needs a string \"name\"");
        rec.name = r["name"].get<std::string>();
        if (!r.contains("components") || !r["components"].is_number_integer())
            throw ParseError(rec.name + ": missing integer \"components\"");
        rec.components = r["components"].get<int>();
        if (!r.contains("linking"))
            throw ParseError(rec.name + ": missing \"linking\" matrix");
        for (const auto& row : r["linking"]) {
            std::vector<long> lrow;
            for (const auto& v : row) lrow.push_back(v.get<long>());
            rec.linking.push_back(std::move(lrow));
        }
        if (r.contains("seifert") && !r["seifert"].is_null())
            rec.seifert = parse_int_matrix(r["seifert"], rec.name + ".seifert");
        if (r.contains("goeritz") && !r["goeritz"].is_null())
            rec.goeritz = parse_int_matrix(r["goeritz"], rec.name + ".goeritz");
        if (r.contains("chiF") && !r["chiF"].is_null()) rec.chiF = r["chiF"].get<long>();
        if (r.contains("P") && !r["P"].is_null()) rec.P = r["P"].get<long>();
        if (r.contains("kappa") && !r["kappa"].is_null()) rec.kappa = r["kappa"].get<int>();
        rec.validate();
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<LinkRecord> load_link_corpus(const std::filesystem::path& path) {
    return parse_link_corpus(load_json_file(path));
}

json to_json(const AbelianGroupInv& inv) {
    json factors = json::array();
    for (const auto& d : inv.factors) factors.push_back(d.get_str());
    return json{{"free_rank", inv.free_rank}, {"factors", factors}, {"pretty", inv.str()}};
}

json to_json(const Mat2& m) {
    return json::array({json::array({m.a().str(), m.b().str()}),
                        json::array({m.c().str(), m.d().str()})});
}

}  // namespace hakenlab
