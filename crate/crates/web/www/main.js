import init, { type_view, sort_trace, box_chain } from "./pkg/arcstrata_web.js";

const $ = (id) => document.getElementById(id);

function attempt(errorId, f) {
  $(errorId).textContent = "";
  try {
    return f();
  } catch (e) {
    $(errorId).textContent = e.message ?? String(e);
    return null;
  }
}

function showType(form) {
  const view = attempt("type-error", () =>
    JSON.parse(type_view(form.alpha.value, form.beta.value, form.gamma.value)));
  if (!view) return;
  $("type-summary").textContent =
    `${view.triple}: ${view.nodes.length} diagrams, ${view.components} components, ` +
    `dim ${view.variety_dim}, ${view.graded ? "graded" : "not graded"}`;
  $("hasse").innerHTML = view.hasse;
  $("node-detail").innerHTML = '<p class="hint">Click a node of the Hasse diagram.</p>';
  for (const g of $("hasse").querySelectorAll(".node")) {
    g.addEventListener("click", () => {
      for (const other of $("hasse").querySelectorAll(".node")) other.classList.remove("selected");
      g.classList.add("selected");
      const n = view.nodes[Number(g.dataset.index)];
      $("node-detail").innerHTML =
        `<p>[${n.index}] G${n.tableau}, ${n.crossings} crossings, stratum dim ${n.dimension}</p>` +
        `<p><code>${n.sequence}</code></p>${n.svg}`;
    });
  }
}

let states = [];

function showStep(i) {
  const s = states[i];
  $("step").value = i;
  $("step-label").textContent = i === 0 ? "input" : `step ${i} of ${states.length - 1}: ${s.step}`;
  $("sort-sequence").textContent = `${s.sequence}\ncrossings: ${s.crossings}`;
  $("sort-diagram").innerHTML = s.svg ?? "";
}

function runSort(form) {
  const view = attempt("sort-error", () => JSON.parse(sort_trace(form.sequence.value, form.extended.checked)));
  if (!view) return;
  states = view.states;
  $("step").max = states.length - 1;
  $("sort-controls").hidden = false;
  showStep(0);
}

function runChain(form) {
  const view = attempt("box-error", () => JSON.parse(box_chain(form.from.value, form.to.value)));
  if (!view) return;
  $("box-chain").textContent = view.below
    ? `${view.chain.join(" → ")} (${view.chain.length - 1} box moves)`
    : "not below in the degeneration order";
}

function onSubmit(id, f) {
  $(id).addEventListener("submit", (e) => {
    e.preventDefault();
    f(e.target);
  });
}

await init();
onSubmit("type-form", showType);
onSubmit("sort-form", runSort);
onSubmit("box-form", runChain);
$("step").addEventListener("input", (e) => showStep(Number(e.target.value)));
$("prev").addEventListener("click", () => showStep(Math.max(0, Number($("step").value) - 1)));
$("next").addEventListener("click", () => showStep(Math.min(states.length - 1, Number($("step").value) + 1)));
showType($("type-form"));
runSort($("sort-form"));
runChain($("box-form"));
