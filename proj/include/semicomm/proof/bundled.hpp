#ifndef SEMICOMM_PROOF_BUNDLED_HPP
#define SEMICOMM_PROOF_BUNDLED_HPP

#include <string>
#include <utility>
#include <vector>

#include "parser.hpp"
#include "script.hpp"

namespace semicomm::proof {

/// Scripts shipped in the repository's proofs/ directory.
inline const std::vector<std::string>& bundled_script_names() {
    static const std::vector<std::string> names{
        "prop11",     "lemma21",    "main2_part1_i123", "main2_part1_i234",
        "lemma31_k2", "lemma31_k3", "lemma41",
    };
    return names;
}

inline std::vector<std::pair<std::string, ProofScript>> bundled_scripts(const std::string& dir) {
    std::vector<std::pair<std::string, ProofScript>> out;
    for (const auto& name : bundled_script_names())
        out.emplace_back(name, load_script(dir + "/" + name + ".prf"));
    return out;
}

} // namespace semicomm::proof

#endif
