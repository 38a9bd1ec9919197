#include "nonarch/classification.hpp"

namespace nonarch {

const char* tag_name(Tag t) noexcept {
    switch (t) {
        case Tag::zero: return "Zero";
        case Tag::infinitesimal: return "Infinitesimal";
        case Tag::appreciable: return "Appreciable";
        case Tag::infinite: return "Infinite";
    }
    return "?";
}

std::string Classification::str() const {
    std::string s = tag_name(tag);
    if (shadow) s += "(shadow " + shadow->str() + ")";
    return s;
}

}  // namespace nonarch
