// Command-line front end: parse group specifications, dispatch the table of
// marks / section / morphism / double Burnside computations, render matrices.
//
// Exit codes: 0 success, 1 method mismatch under --method both, 2 parse
// error, 3 computation bound exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "marksmith/catalogue.hpp"
#include "marksmith/doubleburnside.hpp"
#include "marksmith/render.hpp"

using namespace marksmith;

namespace {

int max_order_from_env() {
  const char* v = std::getenv("MARKSMITH_MAX_ORDER");
  if (!v) return kDefaultMaxOrder;
  return std::atoi(v);
}

OutputFormat parse_format(const std::string& f) {
  if (f == "text") return OutputFormat::Text;
  if (f == "json") return OutputFormat::Json;
  if (f == "csv") return OutputFormat::Csv;
  throw CLI::ValidationError("--format", "expected text|json|csv");
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << content;
}

SecOrder parse_sec_order(const std::string& s) {
  if (s == "full") return SecOrder::Full;
  if (s == "p") return SecOrder::P;
  if (s == "k") return SecOrder::K;
  if (s == "pk") return SecOrder::PK;
  if (s == "prime") return SecOrder::Prime;
  throw CLI::ValidationError("--cim", "expected full|p|k|pk|prime");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"marksmith: tables of marks of direct products by Goursat factorization"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--out may follow the subcommand
  std::string format = "text", out_path;
  app.add_option("--format", format, "Output format: text|json|csv")->capture_default_str();
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  std::string tom_g;
  auto* tom_cmd = app.add_subcommand("tom", "Table of marks of a single group");
  tom_cmd->add_option("group", tom_g, "Group spec")->required();

  std::string tp_g1, tp_g2, tp_method = "factored";
  auto* tp_cmd = app.add_subcommand("tom-product", "Table of marks of a direct product");
  tp_cmd->add_option("group1", tp_g1)->required();
  tp_cmd->add_option("group2", tp_g2)->required();
  tp_cmd->add_option("--method", tp_method, "factored|oracle|both")->capture_default_str();

  std::string sec_g, sec_cim = "full";
  auto* sec_cmd = app.add_subcommand("sections", "Section class incidence matrices");
  sec_cmd->add_option("group", sec_g)->required();
  sec_cmd->add_option("--cim", sec_cim, "full|p|k|pk|prime")->capture_default_str();

  std::string mor_g, mor_u;
  bool mor_cim = false;
  auto* mor_cmd = app.add_subcommand("morphisms", "U-morphism classes of a group");
  mor_cmd->add_option("group", mor_g)->required();
  mor_cmd->add_option("--type", mor_u, "Target group U")->required();
  mor_cmd->add_flag("--cim", mor_cim, "Print the class incidence matrix");

  std::string cls_g1, cls_g2;
  auto* cls_cmd = app.add_subcommand("classes", "Goursat class table of a direct product");
  cls_cmd->add_option("group1", cls_g1)->required();
  cls_cmd->add_option("group2", cls_g2)->required();

  bool dbr_mprime = false, dbr_checkhom = false, dbr_radical = false, dbr_structure = false;
  int dbr_beta = 0;
  auto* dbr_cmd = app.add_subcommand("dbr", "Double Burnside algebra of S3");
  dbr_cmd->add_flag("--mprime", dbr_mprime, "Print the base change matrix M'");
  dbr_cmd->add_option("--beta", dbr_beta, "Print the ghost matrix of basis element b_i (1..22)");
  dbr_cmd->add_flag("--check-hom", dbr_checkhom, "Verify the mark homomorphism on all basis pairs");
  dbr_cmd->add_flag("--radical", dbr_radical, "Radical basis and quotient dimensions");
  dbr_cmd->add_flag("--structure", dbr_structure,
                    "Dump the Mackey structure constants (rows b_i.b_j, columns b_k)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  int max_order = max_order_from_env();
  OutputFormat fmt = OutputFormat::Text;
  try {
    fmt = parse_format(format);

    if (tom_cmd->parsed()) {
      auto ctx = make_ctx(parse_group_spec(tom_g), max_order);
      emit(render(tom_single(*ctx), fmt), out_path);
      return 0;
    }

    if (tp_cmd->parsed()) {
      auto c1 = make_ctx(parse_group_spec(tp_g1), max_order);
      auto c2 = make_ctx(parse_group_spec(tp_g2), max_order);
      ProductCtx pc = build_product_ctx(c1, c2);
      if (tp_method == "factored") {
        emit(render(tom_product(pc), fmt), out_path);
        return 0;
      }
      auto brute_lat = build_lattice(*pc.dp.group, max_order);
      LabeledMatrix oracle = brute_force_tom(brute_lat);
      if (tp_method == "oracle") {
        emit(render(oracle, fmt), out_path);
        return 0;
      }
      if (tp_method != "both") throw CLI::ValidationError("--method", "expected factored|oracle|both");
      LabeledMatrix factored = tom_product(pc);
      std::vector<int> map = match_oracle_classes(pc, brute_lat);
      bool ok = true;
      for (int i = 0; i < oracle.rows() && ok; ++i)
        for (int j = 0; j < oracle.cols() && ok; ++j)
          if (oracle.at(i, j) != factored.at(map[i], map[j])) ok = false;
      emit(render(factored, fmt), out_path);
      if (!ok) {
        std::cerr << "mismatch: factored table differs from the oracle\n";
        return 1;
      }
      std::cerr << "factored table matches the oracle on all "
                << oracle.rows() * oracle.cols() << " entries\n";
      return 0;
    }

    if (sec_cmd->parsed()) {
      auto ctx = make_ctx(parse_group_spec(sec_g), max_order);
      emit(render(cim_sections(ctx->sec, parse_sec_order(sec_cim)), fmt), out_path);
      return 0;
    }

    if (mor_cmd->parsed()) {
      auto ctx = make_ctx(parse_group_spec(mor_g), max_order);
      GroupPtr u = parse_group_spec(mor_u);
      AutGroup aut = automorphism_group(u);
      MorphismSet ms = build_morphisms(ctx->sec, u, aut);
      if (mor_cim) {
        emit(render(cim_mor(ms), fmt), out_path);
        return 0;
      }
      std::string listing;
      for (int i = 0; i < ms.class_count(); ++i)
        listing += ms.class_label(i) + "  orbit size " +
                   std::to_string(ms.classes[i].orbit.size()) + "\n";
      if (listing.empty()) listing = "no sections of this type\n";
      emit(listing, out_path);
      return 0;
    }

    if (cls_cmd->parsed()) {
      auto c1 = make_ctx(parse_group_spec(cls_g1), max_order);
      auto c2 = make_ctx(parse_group_spec(cls_g2), max_order);
      ProductCtx pc = build_product_ctx(c1, c2);
      std::vector<std::string> cols{"type", "order", "normalizer_index", "class_size"};
      std::vector<std::string> rows;
      for (int i = 0; i < pc.class_count(); ++i)
        rows.push_back("L" + std::to_string(i + 1) + " = " + pc.cls(i).label);
      LabeledMatrix table = LabeledMatrix::zero(rows, cols);
      for (int i = 0; i < pc.class_count(); ++i) {
        const auto& cl = pc.cls(i);
        table.at(i, 0) = pc.types[cl.type].model->size();
        table.at(i, 1) = cl.rep.order();
        table.at(i, 2) = Rat(cl.nidx);
        table.at(i, 3) = Rat(pc.dp.group->size()) / (Rat(cl.nidx) * cl.rep.order());
      }
      table.col_labels = {"|U|", "|L|", "|N(L):L|", "class size"};
      emit(render(table, fmt), out_path);
      return 0;
    }

    if (dbr_cmd->parsed()) {
      auto ctx = make_ctx(symmetric_group(3), max_order);
      ProductCtx pc = build_product_ctx(ctx, ctx);
      DoubleBurnside db = build_double_burnside(pc);
      GhostRing gr = build_ghost_ring(db);
      std::string output;
      if (dbr_structure) {
        std::vector<std::string> rows, cols = pc.labels();
        RatMat entries;
        for (int i = 0; i < db.n; ++i)
          for (int j = 0; j < db.n; ++j) {
            rows.push_back("[" + pc.cls(i).label + "].[" + pc.cls(j).label + "]");
            auto v = db.mackey_mul(i, j);
            entries.push_back(std::vector<Rat>(v.begin(), v.end()));
          }
        output += render(LabeledMatrix{rows, cols, entries}, fmt);
      }
      if (dbr_mprime) output += render(gr.mprime, fmt);
      if (dbr_beta > 0) {
        if (dbr_beta > db.n) throw CLI::ValidationError("--beta", "index out of range");
        RatMat img = gr.beta_of_basis(dbr_beta - 1);
        std::vector<std::string> labels;
        for (int t : gr.kernel_partition.transversal)
          labels.push_back(pc.cls(t).label);
        LabeledMatrix m{labels, labels, img};
        output += render(m, fmt);
      }
      if (dbr_checkhom) {
        for (int i = 0; i < db.n; ++i)
          for (int j = 0; j < db.n; ++j) {
            std::vector<Rat> prod_c(db.n, Rat(0));
            auto sc = db.mackey_mul(i, j);
            for (int t = 0; t < db.n; ++t)
              if (sc[t]) {
                auto row = gr.c_coords_of_basis(t);
                for (int z = 0; z < db.n; ++z) prod_c[z] += Rat(sc[t]) * row[z];
              }
            RatMat lhs = gr.beta_of_c(prod_c);
            RatMat rhs = mat_mul(gr.beta_of_basis(i), gr.beta_of_basis(j));
            if (lhs != rhs) {
              emit("homomorphism check FAILED at pair (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")\n",
                   out_path);
              return 1;
            }
          }
        RatMat stacked;
        for (int i = 0; i < db.n; ++i) {
          std::vector<Rat> flat;
          for (const auto& row : gr.beta_of_basis(i)) flat.insert(flat.end(), row.begin(), row.end());
          stacked.push_back(std::move(flat));
        }
        bool injective = mat_rank(stacked) == db.n;
        output += "homomorphism check passed on all " + std::to_string(db.n * db.n) +
                  " basis pairs; injective: " + (injective ? "yes" : "NO") + "\n";
        if (!injective) {
          emit(output, out_path);
          return 1;
        }
      }
      if (dbr_radical) {
        RadicalAnalysis ra = radical_analysis(gr);
        output += "radical basis (c indices):";
        for (int i : ra.radical_basis) output += " " + std::to_string(i + 1);
        output += "\nradical dimension: " + std::to_string(ra.radical_dim);
        output += "\nquotient dimension: " + std::to_string(ra.quotient_dim);
        output += "\nnilpotency degree: " + std::to_string(ra.nilpotency_degree);
        output += "\nquotient blocks:";
        for (int d : ra.quotient_block_dims) output += " " + std::to_string(d);
        output += "\n";
      }
      if (output.empty()) output = "nothing to do: pass --mprime, --beta <i>, --check-hom or --radical\n";
      emit(output, out_path);
      return 0;
    }
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
