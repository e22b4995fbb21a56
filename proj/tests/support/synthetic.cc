#include "support/synthetic.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <unistd.h>

namespace lexind::testing {

std::string ZipfCorpusText(const CorpusShape& shape, std::mt19937_64& rng) {
  std::vector<double> weights(shape.vocabulary);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] = 1.0 / std::pow(static_cast<double>(i + 1), shape.zipf_exponent);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::uniform_int_distribution<std::size_t> length(shape.min_sentence, shape.max_sentence);
  std::ostringstream out;
  std::size_t emitted = 0;
  std::size_t in_doc = 0;
  while (emitted < shape.tokens) {
    const std::size_t len = length(rng);
    for (std::size_t t = 0; t < len; ++t) {
      out << (t ? " " : "") << 'w' << pick(rng);
    }
    out << '\n';
    emitted += len;
    if (++in_doc == shape.sentences_per_document) {
      out << '\n';
      in_doc = 0;
    }
  }
  return out.str();
}

std::map<std::string, std::string> RandomBijection(const std::vector<std::string>& words,
                                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 25);
  std::unordered_set<std::string> used;
  std::map<std::string, std::string> out;
  for (const auto& w : words) {
    std::string name;
    do {
      name.clear();
      for (int i = 0; i < 6; ++i) name.push_back(static_cast<char>('a' + letter(rng)));
    } while (name[0] == 'w' || !used.insert(name).second);
    out.emplace(w, name);
  }
  return out;
}

std::string RenameCorpusText(const std::string& text,
                             const std::map<std::string, std::string>& bijection) {
  std::ostringstream out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string w;
    bool first = true;
    while (words >> w) {
      out << (first ? "" : " ") << bijection.at(w);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> WordTypes(const Corpus& corpus) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& d : corpus.documents)
    for (const auto& s : d.sentences)
      for (const auto& t : s)
        if (seen.insert(t).second) out.push_back(t);
  return out;
}

std::string TempPath(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("lexind_tests_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string WriteTempFile(const std::string& name, const std::string& contents) {
  const auto path = TempPath(name);
  std::ofstream out(path, std::ios::binary);
  out << contents;
  return path;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace lexind::testing
