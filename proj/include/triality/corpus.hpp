#pragma once
#include <filesystem>
#include <map>
#include <string>

#include "triality/gtriality.hpp"
#include "triality/lie_triality.hpp"
#include "triality/loop.hpp"

namespace triality {

// Bundled inputs, keyed by file name. Generation is deterministic, so the
// emitted bytes are stable across runs and platforms.
std::map<std::string, std::string> corpus_files();
void write_corpus(const std::filesystem::path& outdir);

std::string read_file(const std::filesystem::path& path);
nlohmann::json load_json(const std::filesystem::path& path);

// format sniffers: loop tables are plain text, everything else is JSON with a
// distinguishing key set
FiniteLoop load_loop(const std::filesystem::path& path);
TrialityGroup load_triality_group(const std::filesystem::path& path);
LieWithTriality load_lie(const std::filesystem::path& path);
AlgebraSC load_sc(const std::filesystem::path& path);

// $TRIALITY_CORPUS when set, else "corpus"
std::filesystem::path corpus_dir();

}  // namespace triality
