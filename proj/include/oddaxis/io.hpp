#pragma once

// JSON wire formats: span-family and complex-matrix inputs, certificate and
// witness outputs. Reports use nlohmann's ordered_json so key order (and
// therefore the serialized bytes) is identical across runs.

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddaxis/bundles.hpp"
#include "oddaxis/errors.hpp"
#include "oddaxis/linalg.hpp"
#include "oddaxis/spectra.hpp"

namespace oddaxis {

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParameterError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

/// { "n": int, "re": [n*n row-major], "im": [n*n row-major] }
inline ComplexMatrix complex_matrix_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("re") || !j.contains("im"))
        throw ParameterError("complex matrix JSON needs fields n, re, im");
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParameterError("complex matrix size must be >= 1");
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != static_cast<std::size_t>(n) * n || im.size() != re.size())
        throw ParameterError("re/im arrays must hold n*n entries");
    std::vector<Complex> entries(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) entries[i] = {re[i], im[i]};
    return ComplexMatrix(n, std::move(entries));
}

inline Json complex_matrix_to_json(const ComplexMatrix& t) {
    std::vector<double> re, im;
    re.reserve(static_cast<std::size_t>(t.size()) * t.size());
    im.reserve(re.capacity());
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) {
            re.push_back(t(i, j).re);
            im.push_back(t(i, j).im);
        }
    return Json{{"n", t.size()}, {"re", re}, {"im", im}};
}

/// { "q": int, "matrices": [ ... ] } where each entry is a flat row-major
/// array of q*q reals, or { "re": [...], "im": [...] } for a complex matrix
/// that is realified on load (its realified size must equal q).
inline SpanFamily span_family_from_json(const Json& j) {
    if (!j.contains("q") || !j.contains("matrices"))
        throw ParameterError("span family JSON needs fields q and matrices");
    const int q = j.at("q").get<int>();
    if (q < 1) throw ParameterError("span family size q must be >= 1");
    std::vector<RealMatrix> mats;
    for (const Json& entry : j.at("matrices")) {
        if (entry.is_array()) {
            auto flat = entry.get<std::vector<double>>();
            if (flat.size() != static_cast<std::size_t>(q) * q)
                throw ParameterError("span family matrix must hold q*q entries");
            mats.emplace_back(q, q, std::move(flat));
        } else if (entry.is_object() && entry.contains("re") && entry.contains("im")) {
            const auto re = entry.at("re").get<std::vector<double>>();
            const auto im = entry.at("im").get<std::vector<double>>();
            if (re.size() != im.size()) throw ParameterError("re/im arrays must match");
            const int n = static_cast<int>(std::lround(std::sqrt(double(re.size()))));
            if (static_cast<std::size_t>(n) * n != re.size())
                throw ParameterError("re/im arrays must hold a square matrix");
            if (2 * n != q)
                throw ParameterError("realified complex matrix size must equal q");
            std::vector<Complex> entries(re.size());
            for (std::size_t i = 0; i < re.size(); ++i) entries[i] = {re[i], im[i]};
            mats.push_back(realify(ComplexMatrix(n, std::move(entries))));
        } else {
            throw ParameterError("span family matrix must be an array or a {re, im} object");
        }
    }
    return SpanFamily(q, std::move(mats));
}

inline Json span_family_to_json(const SpanFamily& fam) {
    Json mats = Json::array();
    for (const RealMatrix& m : fam.mats) mats.push_back(m.data());
    return Json{{"q", fam.q}, {"matrices", mats}};
}

inline Json certificate_to_json(const SpectralCertificate& cert) {
    std::vector<double> vre, vim;
    for (const Complex& z : cert.eigenvector) {
        vre.push_back(z.re);
        vim.push_back(z.im);
    }
    return Json{{"eigenvalue", {{"re", cert.eigenvalue.re}, {"im", cert.eigenvalue.im}}},
                {"eigenvector", {{"re", vre}, {"im", vim}}},
                {"residual", cert.residual},
                {"witness",
                 {{"alpha", cert.witness.x},
                  {"beta", cert.witness.y},
                  {"gamma", cert.witness.z},
                  {"sigma_min", cert.witness_sigma_min}}},
                {"method", cert.method}};
}

}  // namespace oddaxis
