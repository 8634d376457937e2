import init, { decompose, invariants, explore } from "./pkg/lexideal_wasm.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  out.classList.remove("err");
  try {
    return f();
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e);
    return null;
  }
}

function runDecompose() {
  const out = $("dec-out");
  show(out, () => {
    const r = JSON.parse(decompose($("dec-expr").value, Number($("dec-n").value)));
    const lines = [`I = (${r.gens.join(", ")})`, `minimal primes: ${r.oracle.join(" ∩ ")}`];
    if (r.closed_form) {
      lines.push(`closed form (${r.closed_form.source}): ${r.agrees ? "agrees" : "DISAGREES"}`);
    } else {
      lines.push("no closed form for this expression");
    }
    out.textContent = lines.join("\n");
  });
}

function runInvariants() {
  const out = $("inv-out");
  out.textContent = "computing…";
  // let the page repaint before the homology work
  setTimeout(() => show(out, () => {
    const r = JSON.parse(invariants($("inv-expr").value, Number($("inv-n").value)));
    const f = r.formula;
    const src = (k) => (f && f[k] !== null && f[k] !== undefined ? ` (formula: ${f[k]})` : "");
    out.textContent = [
      `dim S/I = ${r.dim}${src("dim")}`,
      `depth S/I = ${r.depth}${src("depth")}`,
      `pd = ${r.pd}, reg I = ${r.reg}`,
      `multiplicity = ${r.multiplicity}${src("multiplicity")}`,
      `Cohen-Macaulay: ${r.cm}, sequentially Cohen-Macaulay: ${r.scm}`,
      "",
      "Betti table of S/I:",
      r.betti,
    ].join("\n");
  }), 0);
}

function runExplore() {
  const out = $("exp-out");
  const grid = $("exp-grid");
  grid.replaceChildren();
  show(out, () => {
    const r = JSON.parse(explore($("exp-u").value, $("exp-v").value, Number($("exp-n").value)));
    for (const c of r.stratum) {
      const span = document.createElement("span");
      span.className = c.in ? "cell in" : "cell";
      span.textContent = c.m;
      grid.append(span);
    }
    const sh = r.shadows.map((s) => `  degree ${s.degree}: ${s.size} monomials, lexsegment: ${s.lexsegment}`);
    out.textContent = [
      `${r.segment}: ${r.kind}, q = ${r.q}, completely lexsegment: ${r.completely}`,
      "iterated shadows:",
      ...sh,
    ].join("\n");
  });
}

await init();
$("dec-go").onclick = runDecompose;
$("inv-go").onclick = runInvariants;
$("exp-go").onclick = runExplore;
for (const [id, f] of [["dec-expr", runDecompose], ["inv-expr", runInvariants], ["exp-v", runExplore]]) {
  $(id).addEventListener("keydown", (e) => e.key === "Enter" && f());
}
runDecompose();
runInvariants();
runExplore();
