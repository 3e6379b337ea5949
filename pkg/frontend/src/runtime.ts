/**
 * Browser runtime for interactive SVGs produced by the factgraph renderer.
 *
 * The renderer encodes interactivity as class tokens on group elements:
 *
 *   init___<property>___<value>              apply a style property at load
 *   <event>___<source>___<property>___<value> set a style property on this
 *                                             group when <event> fires on the
 *                                             group named <source>
 *
 * Groups are addressed by their <title> child text (the layout tool writes
 * element names there), falling back to the id attribute. Booting twice
 * installs nothing new: each (source, event, carrier, property, value)
 * binding is registered at most once, tracked on the elements themselves so
 * the guarantee holds even across separately loaded copies of this script.
 */

const ALIASES: Record<string, string> = { clicked: "click" };

const EVENTS = new Set(["click", "mouseenter", "mouseleave", "contextmenu"]);

interface TaggedElement extends Element {
  __factgraphUid?: number;
  __factgraphBound?: Record<string, true>;
}

let counter = 0;

function titleOf(group: Element): string {
  for (
    let child = group.firstElementChild;
    child;
    child = child.nextElementSibling
  ) {
    if (child.tagName.toLowerCase() === "title") {
      return (child.textContent ?? "").trim();
    }
  }
  return "";
}

function styleTarget(group: Element): ElementCSSInlineStyle | null {
  const style = (group as Element & Partial<ElementCSSInlineStyle>).style;
  return style ? (group as Element & ElementCSSInlineStyle) : null;
}

/** Wire up one document (or subtree); returns the number of listeners installed. */
export function boot(root?: ParentNode): number {
  const scope = root ?? document;
  const groups = Array.from(scope.querySelectorAll("g"));
  const byTitle = new Map<string, Element>();
  const byId = new Map<string, Element>();
  for (const group of groups) {
    const title = titleOf(group);
    if (title && !byTitle.has(title)) byTitle.set(title, group);
    const id = group.getAttribute("id");
    if (id && !byId.has(id)) byId.set(id, group);
  }

  let installed = 0;
  for (const group of groups) {
    const carrier = styleTarget(group);
    if (!carrier) continue;
    for (const token of (group.getAttribute("class") ?? "").split(/\s+/)) {
      if (!token.includes("___")) continue;
      const fields = token.split("___");
      if (fields.length === 3 && fields[0] === "init") {
        carrier.style.setProperty(fields[1], fields[2]);
        continue;
      }
      if (fields.length !== 4) continue;
      const event = ALIASES[fields[0]] ?? fields[0];
      if (!EVENTS.has(event)) continue;
      const [, sourceName, property, value] = fields;
      const source = (byTitle.get(sourceName) ??
        byId.get(sourceName)) as TaggedElement | undefined;
      if (!source) {
        console.warn(`factgraph: unknown source element ${sourceName}`);
        continue;
      }
      const tagged = group as TaggedElement;
      if (!tagged.__factgraphUid) tagged.__factgraphUid = ++counter;
      const key = `${event}|${tagged.__factgraphUid}|${property}|${value}`;
      const bound = (source.__factgraphBound ??= {});
      if (bound[key]) continue;
      bound[key] = true;
      source.addEventListener(event, (domEvent) => {
        if (event === "contextmenu") domEvent.preventDefault();
        carrier.style.setProperty(property, value);
      });
      installed += 1;
    }
  }
  return installed;
}

declare global {
  var factgraph: { boot: typeof boot } | undefined;
}

globalThis.factgraph = { boot };

if (typeof document !== "undefined") {
  boot(document);
}
