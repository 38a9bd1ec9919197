#include "nonarch/transcript.hpp"

#include <json.hpp>

namespace nonarch {

bool Transcript::passed() const {
    for (const auto& s : steps)
        if (!s.passed) return false;
    return true;
}

std::string Transcript::render_text() const {
    std::string out = "DERIVATION " + title + "\n";
    out += "parameters: v = " + v.str() + ", K = " + std::to_string(k) + ", backend = " + backend + "\n";
    int idx = 0;
    for (const auto& s : steps) {
        std::string num = std::to_string(++idx);
        if (num.size() < 2) num = " " + num;
        out += "[" + num + "] " + s.statement + " — " + (s.passed ? "PASS" : "FAIL") +
               " (" + s.ref + ")\n";
        out += "      lhs " + std::string(s.close ? "≈" : "=") + " " + s.lhs + "\n";
        out += "      rhs " + std::string(s.close ? "≈" : "=") + " " + s.rhs + "\n";
    }
    out += std::string("RESULT: ") + (passed() ? "PASS" : "FAIL") + "\n";
    out += "note: " + footer + "\n";
    return out;
}

std::string Transcript::render_json() const {
    nlohmann::ordered_json doc;
    doc["title"] = title;
    doc["parameters"] = {{"v", v.str()}, {"K", k}, {"backend", backend}};
    doc["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : steps) {
        doc["steps"].push_back({{"statement", s.statement},
                                {"lhs", s.lhs},
                                {"rhs", s.rhs},
                                {"relation", s.close ? "close" : "equal"},
                                {"check", s.passed ? "passed" : "failed"},
                                {"ref", s.ref}});
    }
    doc["footer"] = footer;
    doc["passed"] = passed();
    return doc.dump(2) + "\n";
}

}  // namespace nonarch
