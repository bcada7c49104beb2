import init, { evaluate, chain_report, token_report } from "./pkg/ordsum_web.js";

const $ = (id) => document.getElementById(id);

function show(el, result) {
  el.classList.toggle("error", "error" in result);
  el.textContent = "error" in result
    ? result.error
    : Object.entries(result).map(([k, v]) => `${k}: ${JSON.stringify(v)}`).join("\n");
}

function updateExpr() {
  show($("expr-out"), JSON.parse(evaluate($("expr").value)));
}

function updateChain() {
  const r = JSON.parse(chain_report($("chain-a").value, $("chain-ahat").value));
  const bars = $("chain-bars");
  bars.replaceChildren();
  if (!("error" in r)) {
    r.sigma.forEach((s, i) => {
      const b = document.createElement("span");
      b.className = "bar" + (i === r.p ? " pivot" : "");
      b.style.background = Number(s) < 0 ? "#f6c8c8" : "#d2f0d2";
      b.textContent = s;
      b.title = `sigma_${i}`;
      bars.append(b);
    });
  }
  show($("chain-out"), r);
}

function updateTokens() {
  const r = JSON.parse(token_report($("perm").value));
  const row = $("tokens");
  row.replaceChildren();
  if (!("error" in r)) {
    const perm = $("perm").value.split(/[\s,]+/).filter((s) => s).map(Number);
    perm.forEach((t, i) => {
      const b = document.createElement("button");
      b.className = "token " + (r.records[i] ? "record" : "movable");
      b.textContent = t;
      if (!r.records[i]) {
        b.onclick = () => {
          $("perm").value = [t, ...perm.filter((_, j) => j !== i)].join(",");
          updateTokens();
        };
      }
      row.append(b);
    });
  }
  show($("tokens-out"), r);
}

await init();
$("expr").addEventListener("input", updateExpr);
$("chain-a").addEventListener("input", updateChain);
$("chain-ahat").addEventListener("input", updateChain);
$("perm").addEventListener("input", updateTokens);
updateExpr();
updateChain();
updateTokens();
