#include "thetanull/cli/classify.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "thetanull/cli/document.hpp"
#include "thetanull/errors.hpp"

namespace thetanull::cli {

int run_classify(const ClassifyFlags& flags, std::ostream& out, std::ostream& err) {
  std::ifstream in(flags.input_path);
  if (!in) {
    err << "error: cannot read " << flags.input_path << "\n";
    return kExitValidation;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  std::string report_text;
  try {
    const InputDocument doc = parse_input(buffer.str());
    EffectiveSettings settings;
    settings.target_eps = flags.target_eps.value_or(doc.options.target_eps.value_or(settings.target_eps));
    settings.vanish_tol = flags.vanish_tol.value_or(doc.options.vanish_tol.value_or(settings.vanish_tol));
    settings.rank_tol = flags.rank_tol.value_or(doc.options.rank_tol.value_or(settings.rank_tol));

    StrataOptions opts;
    opts.eval.target_eps = settings.target_eps;
    opts.eval.threads = flags.threads;
    opts.vanish_tol = settings.vanish_tol;
    opts.rank_tol = settings.rank_tol;

    const SiegelPoint tau = to_siegel(doc);
    report_text = render_report(doc, settings, stratum(tau, opts));
  } catch (const DocumentError& e) {
    err << "error: " << flags.input_path << ": " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numerical(e.kind()) ? kExitNumerical : kExitValidation;
  }

  if (flags.out_path) {
    std::ofstream file(*flags.out_path, std::ios::binary);
    if (!(file << report_text)) {
      err << "error: cannot write " << *flags.out_path << "\n";
      return kExitValidation;
    }
  } else {
    out << report_text;
  }
  return kExitOk;
}

}  // namespace thetanull::cli
